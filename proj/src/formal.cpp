#include "tropgw/formal.hpp"

#include "tropgw/solver.hpp"

namespace tropgw {

void FormalSum::add_term(const CurveConfig& c, const Rational& coeff) {
  if (coeff == 0) return;
  CurveConfig key = canonicalize(c);
  auto [it, inserted] = terms_.emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational FormalSum::coefficient_of(const CurveConfig& c) const {
  auto it = terms_.find(canonicalize(c));
  return it == terms_.end() ? Rational(0) : it->second;
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  for (const auto& [c, coeff] : other.terms_) {
    auto [it, inserted] = terms_.emplace(c, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

FormalSum& FormalSum::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [c, coeff] : terms_) coeff *= scale;
  return *this;
}

Rational exp_coefficient(InvariantTable& table, const CurveConfig& c) {
  CurveConfig canon = canonicalize(c);
  if (!canon.outgoing_only())
    throw std::invalid_argument("exp_coefficient: configuration must be outgoing-only");
  Rational product = 1;
  for (const Component& comp : canon.components) {
    product *= table.invariant(connected_config(comp.vectors));
    if (product == 0) return 0;
  }
  return product / Rational(automorphism_order(canon));
}

FormalSum assemble_exp(InvariantTable& table, std::int64_t max_degree, std::int64_t min_chi) {
  FormalSum sum;
  // The unit of the exponential is always present; n_empty = 1.
  if (max_degree >= 0) sum.add_term(CurveConfig{}, 1);
  for (const CurveConfig& c : enumerate_outgoing_configs(max_degree, min_chi)) {
    if (c.empty()) continue;
    sum.add_term(c, exp_coefficient(table, c));
  }
  return sum;
}

}  // namespace tropgw
