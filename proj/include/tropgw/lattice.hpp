#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tropgw {

// Integer 2-vector: the derivative of a tropical edge, i.e. one contact datum.
struct LatticeVector {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend constexpr auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

constexpr LatticeVector operator+(LatticeVector u, LatticeVector v) { return {u.a + v.a, u.b + v.b}; }
constexpr LatticeVector operator-(LatticeVector u, LatticeVector v) { return {u.a - v.a, u.b - v.b}; }
constexpr LatticeVector operator-(LatticeVector v) { return {-v.a, -v.b}; }

// (a,b) ∧ (c,d) = ad - bc.  Bilinear and antisymmetric.
constexpr std::int64_t wedge(LatticeVector u, LatticeVector v) { return u.a * v.b - u.b * v.a; }

// Outgoing (unconstrained) edges live in the cone a > 0, b <= a, independent of
// the number of blowups.
constexpr bool in_universal_cone(LatticeVector v) { return v.a > 0 && v.b <= v.a; }

// Non-negative span of (1,1) and (1,1-n): the contact cone after n blowups.
inline bool in_cone_n(LatticeVector v, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("in_cone_n: n must be positive");
  return v.a >= 0 && (1 - n) * v.a <= v.b && v.b <= v.a;
}

// Incoming (position-constrained) edge vectors y = (y1,y2) with y1 <= -1, y2 > y1.
constexpr bool is_valid_incoming(LatticeVector y) { return y.a <= -1 && y.b > y.a; }

// Sweep order: u must precede v when u ∧ v < 0; parallel vectors tie-break
// lexicographically.
constexpr bool sweep_precedes(LatticeVector u, LatticeVector v) {
  std::int64_t w = wedge(u, v);
  if (w != 0) return w < 0;
  return u < v;
}

inline std::string to_string(LatticeVector v) {
  return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

}  // namespace tropgw
