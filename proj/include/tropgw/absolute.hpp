#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropgw/configs.hpp"
#include "tropgw/rational.hpp"
#include "tropgw/solver.hpp"

namespace tropgw {

// dH - Σ c_i E_i in the n-fold blowup of the plane (n = exceptional.size()).
struct HomologyClass {
  std::int64_t d = 0;
  std::vector<std::int64_t> exceptional;

  std::string to_string() const;               // "d:c1,...,cn"
  static HomologyClass parse(std::string_view text);
  friend auto operator<=>(const HomologyClass&, const HomologyClass&) = default;
};

struct GWRecord {
  std::int64_t genus = 0;
  HomologyClass cls;
  Rational value;
};

// Expansion of Ψ(g) in the n-point blowup: for g = {(1,1-m_1),...,(1,1-m_k)}
// this is Π_i x^{m_i-3} q^H σ_{m_i}(q^{-E_1},...,q^{-E_n}), grouped by
// homology class with the monomial multiplicity as value and
// genus = 1 + Σ(m_i - 3).  Empty when some vector has a != 1 or some
// m_i > n.
std::vector<GWRecord> psi_term(const CurveConfig& g, std::int64_t n);

// Virtual count of rigid genus-g curves in class beta in the n-point blowup:
// the coefficient of x^{genus-1} q^beta in Ψ(F_n), plus 1 when beta is a
// single exceptional class at genus 0.
Rational absolute_invariant(std::int64_t n, std::int64_t genus, const HomologyClass& beta,
                            InvariantTable& table);

// Classical recursion for the numbers N_d of rational plane curves of degree
// d through 3d-1 general points; independent oracle for the genus-0 counts.
std::vector<Rational> kontsevich(std::int64_t max_d);

// Corner multiplicity C(a,d) (0 outside 0 <= d <= a): the total factor picked
// up when an edge of derivative (a,b) absorbs total multiplicity d from one
// blown-up corner.
Rational corner_closed_form(std::int64_t a, std::int64_t d);

// (-1)^{d-1}/d^2: the d-fold cover contribution.
Rational multiple_cover(std::int64_t d);

}  // namespace tropgw
