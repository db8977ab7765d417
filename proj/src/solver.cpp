#include "tropgw/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropgw {

namespace {

std::string describe(const CurveConfig& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    if (i) out += ",";
    out += "[";
    bool first = true;
    if (c.incoming && c.incoming->component == i) {
      out += "in" + to_string(c.incoming->vector);
      first = false;
    }
    for (LatticeVector v : c.components[i].vectors) {
      if (!first) out += ",";
      out += to_string(v);
      first = false;
    }
    out += "]";
  }
  return out + "}";
}

// (degree, -chi) with lexicographic comparison: the well-founded order that
// makes the recursion triangular.
std::pair<std::int64_t, std::int64_t> recursion_rank(const CurveConfig& c) {
  return {degree(c), -euler_characteristic(c)};
}

}  // namespace

std::vector<LatticeVector> pivot_candidates(const CurveConfig& g) {
  std::vector<LatticeVector> out;
  for (const Component& comp : g.components)
    for (LatticeVector v : comp.vectors)
      if (v.b <= v.a - 2) out.push_back(v);
  std::sort(out.begin(), out.end(), [](LatticeVector x, LatticeVector y) {
    if (x.a != y.a) return x.a > y.a;
    return x.b < y.b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<LatticeVector>> consumed_multisets(LatticeVector total) {
  std::vector<std::vector<LatticeVector>> out;
  std::vector<LatticeVector> current;
  // Vectors chosen in non-increasing lex order; each element needs a >= 1 and
  // b >= remaining.b - (remaining.a - a) for the rest to stay summable.
  auto recurse = [&](auto&& self, LatticeVector remaining,
                     std::optional<LatticeVector> bound) -> void {
    if (remaining.a == 0) {
      if (remaining.b == 0) out.push_back(current);
      return;
    }
    if (remaining.a < 0) return;
    for (std::int64_t a = bound ? std::min(bound->a, remaining.a) : remaining.a; a >= 1; --a) {
      std::int64_t b_hi = (bound && a == bound->a) ? std::min(a, bound->b) : a;
      std::int64_t b_lo = remaining.b - (remaining.a - a);
      for (std::int64_t b = b_hi; b >= b_lo; --b) {
        LatticeVector v{a, b};
        current.push_back(v);
        self(self, remaining - v, v);
        current.pop_back();
      }
    }
  };
  if (total.a >= 0) recurse(recurse, total, std::nullopt);
  for (auto& ms : out) std::sort(ms.begin(), ms.end());
  return out;
}

namespace {

// Partitions of (consumed ∪ survivors) into blocks each containing at least
// one consumed element; every block will be merged into the incoming class by
// the sweep, so survivors may only join blocks seeded by consumed vectors.
void partitions_into_sources(const std::vector<Component>& untouched,
                             const std::vector<LatticeVector>& consumed,
                             const std::vector<LatticeVector>& survivors,
                             std::set<CurveConfig>& out) {
  std::vector<std::vector<LatticeVector>> blocks;
  auto emit = [&]() {
    CurveConfig c;
    c.components = untouched;
    for (const auto& block : blocks) c.components.push_back(Component{block});
    out.insert(canonicalize(c));
  };
  auto place_survivors = [&](auto&& self, std::size_t idx) -> void {
    if (idx == survivors.size()) {
      emit();
      return;
    }
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      blocks[bi].push_back(survivors[idx]);
      self(self, idx + 1);
      blocks[bi].pop_back();
    }
  };
  auto place_consumed = [&](auto&& self, std::size_t idx) -> void {
    if (idx == consumed.size()) {
      if (blocks.empty() && !survivors.empty()) return;
      place_survivors(place_survivors, 0);
      return;
    }
    const std::size_t existing = blocks.size();
    for (std::size_t bi = 0; bi < existing; ++bi) {
      blocks[bi].push_back(consumed[idx]);
      self(self, idx + 1);
      blocks[bi].pop_back();
    }
    blocks.push_back({consumed[idx]});
    self(self, idx + 1);
    blocks.pop_back();
  };
  place_consumed(place_consumed, 0);
}

}  // namespace

std::vector<std::pair<CurveConfig, Rational>> enumerate_sources(const CurveConfig& target,
                                                                LatticeVector y, SweepSide side) {
  CurveConfig T = canonicalize(target);
  if (!T.incoming || T.incoming->vector != y)
    throw std::invalid_argument("enumerate_sources: target must carry incoming vector " +
                                to_string(y));
  const std::size_t marked = T.incoming->component;
  std::vector<Component> untouched;
  for (std::size_t i = 0; i < T.components.size(); ++i)
    if (i != marked) untouched.push_back(T.components[i]);
  const std::vector<LatticeVector>& incoming_out = T.components[marked].vectors;

  std::set<CurveConfig> candidates;
  const LatticeVector drop = side == SweepSide::left ? LatticeVector{-1, 0} : LatticeVector{0, -1};
  for (const auto& consumed : consumed_multisets(drop - y))
    partitions_into_sources(untouched, consumed, incoming_out, candidates);
  // Terminal-arrow case: one vector w of the incoming class was emitted by
  // the arrow rather than surviving from the source.
  for (std::size_t i = 0; i < incoming_out.size(); ++i) {
    if (i > 0 && incoming_out[i] == incoming_out[i - 1]) continue;
    LatticeVector w = incoming_out[i];
    std::vector<LatticeVector> survivors = incoming_out;
    survivors.erase(survivors.begin() + static_cast<std::ptrdiff_t>(i));
    for (const auto& consumed : consumed_multisets(w - y))
      partitions_into_sources(untouched, consumed, survivors, candidates);
  }

  std::vector<std::pair<CurveConfig, Rational>> out;
  for (const CurveConfig& src : candidates) {
    FormalSum expansion = side == SweepSide::left ? expand_left(src, y) : expand_right(y, src);
    Rational coeff = expansion.coefficient_of(T);
    if (coeff != 0) out.emplace_back(src, coeff);
  }
  return out;
}

CurveConfig InvariantTable::checked_key(const CurveConfig& g) const {
  CurveConfig canon = canonicalize(g);
  if (!canon.outgoing_only() || canon.components.size() != 1)
    throw std::invalid_argument("invariant: configuration must be connected and outgoing-only");
  return canon;
}

bool InvariantTable::has(const CurveConfig& g) const {
  return solved_.count(canonicalize(g)) != 0;
}

void InvariantTable::insert_solved(const CurveConfig& g, const Rational& value) {
  CurveConfig key = checked_key(g);
  if (key != g) throw std::invalid_argument("insert_solved: key not canonical");
  auto [it, inserted] = solved_.emplace(std::move(key), value);
  if (!inserted && it->second != value)
    throw std::invalid_argument("insert_solved: conflicting value for " + describe(g));
}

Rational InvariantTable::invariant(const CurveConfig& g) {
  CurveConfig key = checked_key(g);
  if (auto it = solved_.find(key); it != solved_.end()) return it->second;
  if (degree_cap && degree(key) > *degree_cap)
    throw std::runtime_error("insufficient table: " + describe(key) + " exceeds degree cap " +
                             std::to_string(*degree_cap));
  if (in_progress_.count(key))
    throw std::runtime_error("cyclic dependency while solving " + describe(key));
  if (genus(key.components[0]) < 0) {
    solved_.emplace(key, Rational(0));
    return 0;
  }
  return solve_equation(key, std::nullopt);
}

Rational InvariantTable::solve_via_pivot(const CurveConfig& g) {
  return solve_equation(checked_key(g), std::nullopt);
}

Rational InvariantTable::solve_via_pivot(const CurveConfig& g, LatticeVector pivot) {
  return solve_equation(checked_key(g), pivot);
}

Rational InvariantTable::solve_equation(const CurveConfig& g,
                                        std::optional<LatticeVector> forced_pivot) {
  auto pivots = pivot_candidates(g);
  if (pivots.empty())
    throw std::runtime_error("no pivot: every vector of " + describe(g) + " has b >= a-1");
  LatticeVector pivot = pivots.front();
  if (forced_pivot) {
    if (std::find(pivots.begin(), pivots.end(), *forced_pivot) == pivots.end())
      throw std::invalid_argument("solve_via_pivot: " + to_string(*forced_pivot) +
                                  " is not a pivot of " + describe(g));
    pivot = *forced_pivot;
  }
  const LatticeVector y{-pivot.a, -1 - pivot.b};

  // Target: g with one copy of the pivot replaced by the incoming edge y.
  CurveConfig target;
  {
    std::vector<LatticeVector> rest = g.components[0].vectors;
    rest.erase(std::find(rest.begin(), rest.end(), pivot));
    target.components.push_back(Component{std::move(rest)});
    target.incoming = IncomingMark{0, y};
    target = canonicalize(target);
  }

  if (!in_progress_.insert(g).second)
    throw std::runtime_error("cyclic dependency while solving " + describe(g));
  struct Guard {
    std::set<CurveConfig>& set;
    const CurveConfig& key;
    ~Guard() { set.erase(key); }
  } guard{in_progress_, g};

  const auto rank = recursion_rank(g);
  auto known_coefficient = [&](const CurveConfig& src) {
    for (const Component& comp : src.components) {
      CurveConfig dep = connected_config(comp.vectors);
      if (solved_.count(dep)) continue;
      if (recursion_rank(dep) >= rank)
        throw std::runtime_error("non-triangular dependency: solving " + describe(g) +
                                 " requires " + describe(dep));
    }
    return exp_coefficient(*this, src);
  };

  Rational known = 0;
  Rational unknown_coefficient = 0;
  for (const auto& [src, coeff] : enumerate_sources(target, y, SweepSide::left)) {
    if (src == g)
      throw std::logic_error("solver: unknown appeared in the left expansion of " + describe(g));
    known += coeff * known_coefficient(src);
  }
  for (const auto& [src, coeff] : enumerate_sources(target, y, SweepSide::right)) {
    if (src == g) {
      unknown_coefficient = coeff;
      continue;
    }
    known -= coeff * known_coefficient(src);
  }
  if (unknown_coefficient == 0)
    throw std::logic_error("solver: unknown coefficient vanished for " + describe(g));

  Rational value = known * Rational(automorphism_order(g)) / unknown_coefficient;
  auto [it, inserted] = solved_.emplace(g, value);
  if (!inserted && it->second != value)
    throw std::logic_error("solver: pivot equation disagrees with stored value for " + describe(g));
  return value;
}

IdentityReport verify_identity(InvariantTable& table, LatticeVector y, std::int64_t max_degree,
                               std::int64_t min_chi) {
  if (!is_valid_incoming(y))
    throw std::invalid_argument("verify_identity: " + to_string(y) + " is not a valid incoming vector");
  FormalSum ef = assemble_exp(table, max_degree, min_chi - 1);
  FormalSum left = expand_sum(SweepSide::left, ef, y);
  FormalSum right = expand_sum(SweepSide::right, ef, y);

  IdentityReport report{y, max_degree, min_chi, 0, {}};
  std::set<CurveConfig> window;
  auto collect = [&](const FormalSum& sum) {
    for (const auto& [config, coeff] : sum.terms())
      if (degree(config) <= max_degree && euler_characteristic(config) >= min_chi)
        window.insert(config);
  };
  collect(left);
  collect(right);
  report.compared = window.size();
  for (const CurveConfig& config : window) {
    Rational l = left.coefficient_of(config);
    Rational r = right.coefficient_of(config);
    if (l != r) report.mismatches.push_back({config, l, r});
  }
  return report;
}

void extend_invariant_table(InvariantTable& table, std::int64_t max_degree, std::int64_t min_chi) {
  std::vector<CurveConfig> configs = enumerate_connected_configs(max_degree, min_chi);
  std::stable_sort(configs.begin(), configs.end(), [](const CurveConfig& x, const CurveConfig& y) {
    return recursion_rank(x) < recursion_rank(y);
  });
  for (const CurveConfig& c : configs) table.invariant(c);
  table.declared_max_degree = max_degree;
  table.declared_min_chi = min_chi;
}

InvariantTable build_invariant_table(std::int64_t max_degree, std::int64_t min_chi) {
  InvariantTable table;
  extend_invariant_table(table, max_degree, min_chi);
  return table;
}

std::vector<LatticeVector> default_verification_incomings() {
  return {{-1, 0}, {-1, 1}, {-1, 2}, {-2, 1}, {-2, -1}};
}

}  // namespace tropgw
