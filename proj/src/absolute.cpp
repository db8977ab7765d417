#include "tropgw/absolute.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tropgw {

std::string HomologyClass::to_string() const {
  std::string out = std::to_string(d);
  if (exceptional.empty()) return out;
  out += ':';
  for (std::size_t i = 0; i < exceptional.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(exceptional[i]);
  }
  return out;
}

HomologyClass HomologyClass::parse(std::string_view text) {
  auto parse_nonneg = [&](std::string_view s) {
    if (s.empty() || s.size() > 18) throw std::invalid_argument("homology class: bad integer in '" +
                                                                std::string(text) + "'");
    std::int64_t value = 0;
    for (char c : s) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("homology class: bad integer in '" + std::string(text) + "'");
      value = value * 10 + (c - '0');
    }
    return value;
  };
  HomologyClass beta;
  auto colon = text.find(':');
  beta.d = parse_nonneg(text.substr(0, colon));
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      beta.exceptional.push_back(parse_nonneg(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return beta;
}

std::vector<GWRecord> psi_term(const CurveConfig& g, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("psi_term: n must be positive");
  CurveConfig canon = canonicalize(g);
  if (!canon.outgoing_only() || canon.components.size() != 1)
    throw std::invalid_argument("psi_term: configuration must be connected and outgoing-only");

  std::vector<std::int64_t> m;
  std::int64_t genus_of_records = 1;
  for (LatticeVector v : canon.components[0].vectors) {
    if (v.a != 1) return {};
    m.push_back(1 - v.b);
    genus_of_records += (1 - v.b) - 3;
  }
  for (std::int64_t mi : m)
    if (mi > n) return {};

  // Multiply out the elementary symmetric polynomials: one subset of blowup
  // points of size m_i per factor.
  std::map<std::vector<std::int64_t>, Integer> classes;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  auto expand = [&](auto&& self, std::size_t factor) -> void {
    if (factor == m.size()) {
      classes[counts] += 1;
      return;
    }
    std::vector<std::int64_t> subset;
    auto choose = [&](auto&& inner, std::int64_t next, std::int64_t still_needed) -> void {
      if (still_needed == 0) {
        for (std::int64_t j : subset) counts[static_cast<std::size_t>(j)] += 1;
        self(self, factor + 1);
        for (std::int64_t j : subset) counts[static_cast<std::size_t>(j)] -= 1;
        return;
      }
      for (std::int64_t j = next; j + still_needed <= n; ++j) {
        subset.push_back(j);
        inner(inner, j + 1, still_needed - 1);
        subset.pop_back();
      }
    };
    choose(choose, 0, m[factor]);
  };
  expand(expand, 0);

  std::vector<GWRecord> records;
  records.reserve(classes.size());
  for (const auto& [counts_key, multiplicity] : classes)
    records.push_back({genus_of_records,
                       HomologyClass{static_cast<std::int64_t>(m.size()), counts_key},
                       Rational(multiplicity)});
  return records;
}

namespace {

// Number of 0-1 matrices with the given row sums and column sums; columns
// with equal remaining demand are interchangeable, so the DP state is the
// count of columns per demand value.
Integer matrix_count(const std::vector<std::int64_t>& rows, const std::vector<std::int64_t>& cols) {
  std::int64_t max_demand = 0;
  for (std::int64_t c : cols) max_demand = std::max(max_demand, c);
  std::vector<std::int64_t> demand_counts(static_cast<std::size_t>(max_demand) + 1, 0);
  for (std::int64_t c : cols) demand_counts[static_cast<std::size_t>(c)] += 1;

  std::map<std::pair<std::size_t, std::vector<std::int64_t>>, Integer> memo;
  auto solve = [&](auto&& self, std::size_t row, std::vector<std::int64_t>& counts) -> Integer {
    if (row == rows.size()) {
      for (std::size_t v = 1; v < counts.size(); ++v)
        if (counts[v] != 0) return 0;
      return 1;
    }
    auto key = std::make_pair(row, counts);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    // Distribute this row's ones over the demand classes.
    std::vector<std::int64_t> hits(counts.size(), 0);
    auto distribute = [&](auto&& inner, std::size_t v, std::int64_t left) -> void {
      if (v == counts.size()) {
        if (left != 0) return;
        Integer ways = 1;
        for (std::size_t u = 1; u < counts.size(); ++u)
          if (hits[u]) ways *= binomial(counts[u], hits[u]);
        std::vector<std::int64_t> next = counts;
        for (std::size_t u = 1; u < counts.size(); ++u) {
          next[u] -= hits[u];
          next[u - 1] += hits[u];
        }
        total += ways * self(self, row + 1, next);
        return;
      }
      for (std::int64_t k = 0; k <= std::min<std::int64_t>(left, counts[v]); ++k) {
        hits[v] = k;
        inner(inner, v + 1, left - k);
      }
      hits[v] = 0;
    };
    if (rows[row] == 0) {
      total = self(self, row + 1, counts);
    } else {
      distribute(distribute, 1, rows[row]);
    }
    memo.emplace(std::move(key), total);
    return memo.at({row, counts});
  };
  return solve(solve, 0, demand_counts);
}

}  // namespace

Rational absolute_invariant(std::int64_t n, std::int64_t genus, const HomologyClass& beta,
                            InvariantTable& table) {
  if (n < 1) throw std::invalid_argument("absolute_invariant: n must be positive");
  if (static_cast<std::int64_t>(beta.exceptional.size()) != n)
    throw std::invalid_argument("absolute_invariant: class has " +
                                std::to_string(beta.exceptional.size()) +
                                " exceptional multiplicities, expected " + std::to_string(n));
  if (beta.d < 0) throw std::invalid_argument("absolute_invariant: negative degree");
  std::int64_t total_c = 0;
  std::int64_t positive = 0;
  for (std::int64_t c : beta.exceptional) {
    if (c < 0) throw std::invalid_argument("absolute_invariant: negative exceptional multiplicity");
    total_c += c;
    if (c > 0) ++positive;
  }

  Rational result = 0;
  // The standalone exceptional spheres contribute x^{-1} q^{E_i}.
  if (genus == 0 && beta.d == 0 && total_c == 1 && positive == 1) result += 1;
  if (genus < 0 || beta.d == 0) return result;

  const std::int64_t k = beta.d;
  const std::int64_t m_total = genus + 3 * k - 1;
  if (m_total != total_c) return result;
  for (std::int64_t c : beta.exceptional)
    if (c > k) return result;

  // Connected Γ = {(1,1-m_1),...,(1,1-m_k)} with Σm = m_total; 0 <= m_i <= n
  // keeps every vector inside cone_n.
  std::vector<std::int64_t> m;
  auto enumerate = [&](auto&& self, std::int64_t slots, std::int64_t sum, std::int64_t hi) -> void {
    if (slots == 0) {
      if (sum != 0) return;
      std::vector<LatticeVector> vectors;
      for (std::int64_t mi : m) vectors.push_back({1, 1 - mi});
      CurveConfig gamma = connected_config(std::move(vectors));
      Rational n_gamma = table.invariant(gamma);
      if (n_gamma == 0) return;
      Integer tuples = matrix_count(m, beta.exceptional);
      if (tuples == 0) return;
      result += n_gamma * Rational(tuples) / Rational(automorphism_order(gamma));
      return;
    }
    for (std::int64_t mi = std::min(hi, sum); mi >= 0; --mi) {
      if (mi * slots < sum) break;
      m.push_back(mi);
      self(self, slots - 1, sum - mi, mi);
      m.pop_back();
    }
  };
  enumerate(enumerate, k, m_total, std::min(n, m_total));
  return result;
}

std::vector<Rational> kontsevich(std::int64_t max_d) {
  if (max_d < 1) throw std::invalid_argument("kontsevich: max_d must be positive");
  std::vector<Rational> n(static_cast<std::size_t>(max_d) + 1);
  n[1] = 1;
  for (std::int64_t d = 2; d <= max_d; ++d) {
    Rational total = 0;
    for (std::int64_t d1 = 1; d1 < d; ++d1) {
      std::int64_t d2 = d - d1;
      Rational factor = Rational(d2 * binomial(3 * d - 4, 3 * d1 - 2)) -
                        Rational(d1 * binomial(3 * d - 4, 3 * d1 - 1));
      total += n[d1] * n[d2] * Rational(d1) * Rational(d1) * Rational(d2) * factor;
    }
    n[d] = total;
  }
  return {n.begin() + 1, n.end()};
}

Rational corner_closed_form(std::int64_t a, std::int64_t d) {
  if (a < 1) throw std::invalid_argument("corner_closed_form: a must be positive");
  if (d < 0 || d > a) return 0;
  return Rational(binomial(a, d));
}

Rational multiple_cover(std::int64_t d) {
  if (d == 0) throw std::invalid_argument("multiple_cover: d must be nonzero");
  Rational value(1, d * d);
  return d % 2 == 0 ? -value : value;
}

}  // namespace tropgw
