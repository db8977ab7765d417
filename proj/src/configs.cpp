#include "tropgw/configs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tropgw {

void validate(const CurveConfig& c) {
  if (c.incoming) {
    if (c.incoming->component >= c.components.size())
      throw std::invalid_argument("config: incoming mark references missing component");
    if (!is_valid_incoming(c.incoming->vector))
      throw std::invalid_argument("config: incoming vector " + to_string(c.incoming->vector) +
                                  " is not a valid incoming edge");
  }
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const Component& comp = c.components[i];
    bool marked = c.incoming && c.incoming->component == i;
    if (comp.vectors.empty() && !marked)
      throw std::invalid_argument("config: empty component without incoming mark");
    for (LatticeVector v : comp.vectors)
      if (!in_universal_cone(v))
        throw std::invalid_argument("config: outgoing vector " + to_string(v) +
                                    " outside the universal cone");
  }
}

CurveConfig canonicalize(const CurveConfig& c) {
  validate(c);
  struct Entry {
    std::vector<LatticeVector> vectors;
    bool marked;
  };
  std::vector<Entry> entries;
  entries.reserve(c.components.size());
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    Entry e{c.components[i].vectors, c.incoming && c.incoming->component == i};
    std::sort(e.vectors.begin(), e.vectors.end());
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.vectors != y.vectors) return x.vectors < y.vectors;
    return x.marked && !y.marked;
  });
  CurveConfig out;
  out.components.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].marked) out.incoming = IncomingMark{i, c.incoming->vector};
    out.components.push_back(Component{std::move(entries[i].vectors)});
  }
  return out;
}

Integer automorphism_order(const CurveConfig& c) {
  CurveConfig canon = canonicalize(c);
  // Iso classes of components: equal sorted vector lists, marked != unmarked.
  std::map<std::pair<std::vector<LatticeVector>, bool>, std::int64_t> classes;
  for (std::size_t i = 0; i < canon.components.size(); ++i) {
    bool marked = canon.incoming && canon.incoming->component == i;
    classes[{canon.components[i].vectors, marked}] += 1;
  }
  Integer order = 1;
  for (const auto& [key, count] : classes) {
    Integer internal = 1;
    const auto& vs = key.first;
    for (std::size_t i = 0; i < vs.size();) {
      std::size_t j = i;
      while (j < vs.size() && vs[j] == vs[i]) ++j;
      internal *= factorial(static_cast<std::int64_t>(j - i));
      i = j;
    }
    order *= factorial(count);
    for (std::int64_t m = 0; m < count; ++m) order *= internal;
  }
  return order;
}

std::int64_t genus(const Component& comp, const std::optional<LatticeVector>& incoming) {
  std::int64_t g = 1;
  for (LatticeVector v : comp.vectors) g -= v.a + v.b + 1;
  if (incoming) g += incoming->a + incoming->b;
  return g;
}

std::int64_t degree(const CurveConfig& c) {
  std::int64_t d = 0;
  for (const Component& comp : c.components)
    for (LatticeVector v : comp.vectors) d += v.a;
  if (c.incoming) d -= c.incoming->vector.a;
  return d;
}

std::int64_t euler_characteristic(const Component& comp,
                                  const std::optional<LatticeVector>& incoming) {
  std::int64_t k = static_cast<std::int64_t>(comp.vectors.size()) + (incoming ? 1 : 0);
  return 2 - 2 * genus(comp, incoming) - k;
}

std::int64_t euler_characteristic(const CurveConfig& c) {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    std::optional<LatticeVector> inc;
    if (c.incoming && c.incoming->component == i) inc = c.incoming->vector;
    chi += euler_characteristic(c.components[i], inc);
  }
  return chi;
}

std::vector<LatticeVector> sort_for_sweep(std::vector<LatticeVector> vs) {
  for (LatticeVector v : vs)
    if (!in_universal_cone(v))
      throw std::invalid_argument("sort_for_sweep: " + to_string(v) + " outside the universal cone");
  std::stable_sort(vs.begin(), vs.end(), sweep_precedes);
  return vs;
}

CurveConfig connected_config(std::vector<LatticeVector> vectors) {
  CurveConfig c;
  c.components.push_back(Component{std::move(vectors)});
  return canonicalize(c);
}

CurveConfig outgoing_config(std::vector<std::vector<LatticeVector>> components) {
  CurveConfig c;
  for (auto& vs : components) c.components.push_back(Component{std::move(vs)});
  return canonicalize(c);
}

namespace {

std::int64_t chi_term(LatticeVector v) { return 1 + 2 * v.a + 2 * v.b; }

// Multisets of universal-cone vectors with total degree <= max_degree and
// total chi-term sum >= min_chi.  Vectors are chosen in non-increasing
// lexicographic order; (1,1) carries the maximal chi-term per unit degree (5),
// which bounds how negative any single b may go.
void enumerate_multisets(std::int64_t degree_left, std::int64_t chi_needed,
                         std::optional<LatticeVector> bound,
                         std::vector<LatticeVector>& current,
                         std::vector<std::vector<LatticeVector>>& out) {
  if (chi_needed <= 0) out.push_back(current);
  for (std::int64_t a = bound ? std::min(bound->a, degree_left) : degree_left; a >= 1; --a) {
    std::int64_t b_hi = (bound && a == bound->a) ? std::min(a, bound->b) : a;
    // chi_term(v) >= chi_needed - 5 * (degree_left - a)  =>  lower bound on b.
    std::int64_t slack = chi_needed - 5 * (degree_left - a) - 1 - 2 * a;
    std::int64_t b_lo = slack <= 0 ? -((-slack) / 2) : (slack + 1) / 2;
    for (std::int64_t b = b_hi; b >= b_lo; --b) {
      LatticeVector v{a, b};
      current.push_back(v);
      enumerate_multisets(degree_left - a, chi_needed - chi_term(v), v, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<CurveConfig> enumerate_connected_configs(std::int64_t max_degree, std::int64_t min_chi) {
  if (max_degree < 0) return {};
  std::vector<std::vector<LatticeVector>> multisets;
  std::vector<LatticeVector> scratch;
  enumerate_multisets(max_degree, min_chi, std::nullopt, scratch, multisets);
  std::vector<CurveConfig> out;
  for (auto& ms : multisets) {
    if (ms.empty()) continue;
    out.push_back(connected_config(std::move(ms)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CurveConfig> enumerate_outgoing_configs(std::int64_t max_degree, std::int64_t min_chi) {
  if (max_degree < 0) return {};
  std::vector<std::vector<LatticeVector>> multisets;
  std::vector<LatticeVector> scratch;
  enumerate_multisets(max_degree, min_chi, std::nullopt, scratch, multisets);
  std::set<CurveConfig> out;
  for (const auto& ms : multisets) {
    if (ms.empty()) {
      out.insert(CurveConfig{});
      continue;
    }
    // All partitions of the multiset into components.  Partition blocks of
    // positions; duplicates collapse under canonicalization.
    std::vector<std::vector<std::size_t>> blocks;
    auto place = [&](auto&& self, std::size_t idx) -> void {
      if (idx == ms.size()) {
        CurveConfig c;
        for (const auto& block : blocks) {
          Component comp;
          for (std::size_t p : block) comp.vectors.push_back(ms[p]);
          c.components.push_back(std::move(comp));
        }
        out.insert(canonicalize(c));
        return;
      }
      const std::size_t existing = blocks.size();
      for (std::size_t bi = 0; bi < existing; ++bi) {
        blocks[bi].push_back(idx);
        self(self, idx + 1);
        blocks[bi].pop_back();
      }
      blocks.push_back({idx});
      self(self, idx + 1);
      blocks.pop_back();
    };
    place(place, 0);
  }
  return {out.begin(), out.end()};
}

}  // namespace tropgw
