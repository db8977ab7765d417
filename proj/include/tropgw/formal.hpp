#pragma once

#include <cstdint>
#include <map>

#include "tropgw/configs.hpp"
#include "tropgw/rational.hpp"

namespace tropgw {

class InvariantTable;

// Finite formal sum of curve configurations with exact rational coefficients.
// Keys are canonical; zero coefficients are never stored.
class FormalSum {
 public:
  FormalSum() = default;

  void add_term(const CurveConfig& c, const Rational& coeff);
  Rational coefficient_of(const CurveConfig& c) const;

  FormalSum& operator+=(const FormalSum& other);
  friend FormalSum operator+(FormalSum lhs, const FormalSum& rhs) { return lhs += rhs; }
  FormalSum& operator*=(const Rational& scale);

  const std::map<CurveConfig, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool operator==(const FormalSum&) const = default;

 private:
  std::map<CurveConfig, Rational> terms_;
};

// Coefficient of c in e^F: the product of the component invariants divided by
// |Aut c|.  1 for the empty configuration.  Missing invariants are solved on
// demand through the table.
Rational exp_coefficient(InvariantTable& table, const CurveConfig& c);

// Truncation of e^F: the sum of exp_coefficient(c)·c over every outgoing-only
// configuration with degree <= max_degree and Euler characteristic >= min_chi.
// The empty configuration (coefficient 1) is always included.
FormalSum assemble_exp(InvariantTable& table, std::int64_t max_degree, std::int64_t min_chi);

}  // namespace tropgw
