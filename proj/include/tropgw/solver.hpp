#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tropgw/configs.hpp"
#include "tropgw/formal.hpp"
#include "tropgw/sweep.hpp"

namespace tropgw {

// Memoized table of connected invariants n_Γ, solved recursively by equating
// the two sweep expansions of e^F at an incoming-marked target.
class InvariantTable {
 public:
  InvariantTable() = default;

  // n_Γ for a connected outgoing-only configuration.  Vanishes outright when
  // the forced genus is negative; otherwise solved through the pivot equation.
  Rational invariant(const CurveConfig& g);

  // Pivot-equation solve with the negative-genus shortcut disabled at top
  // level (dependencies still go through invariant()).  With an explicit
  // pivot, uses that vector instead of the deterministic choice.
  Rational solve_via_pivot(const CurveConfig& g);
  Rational solve_via_pivot(const CurveConfig& g, LatticeVector pivot);

  bool has(const CurveConfig& g) const;
  std::size_t size() const { return solved_.size(); }
  const std::map<CurveConfig, Rational>& entries() const { return solved_; }

  // Marks an externally obtained value as solved (load path).  Rejects
  // non-canonical or non-connected keys and values conflicting with existing
  // entries.
  void insert_solved(const CurveConfig& g, const Rational& value);

  // Bounds metadata carried through persistence.
  std::optional<std::int64_t> declared_max_degree;
  std::optional<std::int64_t> declared_min_chi;

  // When set, requesting an invariant of larger degree throws
  // "insufficient table" instead of solving.
  std::optional<std::int64_t> degree_cap;

 private:
  Rational solve_equation(const CurveConfig& g, std::optional<LatticeVector> forced_pivot);
  CurveConfig checked_key(const CurveConfig& g) const;

  std::map<CurveConfig, Rational> solved_;
  std::set<CurveConfig> in_progress_;
};

// Pivot candidates of a connected configuration: vectors (a,b) with
// b <= a - 2, exactly those whose replacement (-a,-1-b) is a valid incoming
// edge.  Ordered by the deterministic rule (maximal a, then smallest b).
std::vector<LatticeVector> pivot_candidates(const CurveConfig& g);

// All multisets of universal-cone vectors summing to total (empty when
// total.a < 0, or when total.a = 0 with total.b != 0).
std::vector<std::vector<LatticeVector>> consumed_multisets(LatticeVector total);

// Every outgoing-only configuration whose sweep expansion on the given side
// hits target with nonzero coefficient, paired with that coefficient.
// target's incoming vector must be y.
std::vector<std::pair<CurveConfig, Rational>> enumerate_sources(const CurveConfig& target,
                                                                LatticeVector y, SweepSide side);

struct IdentityMismatch {
  CurveConfig config;
  Rational left;
  Rational right;
};

struct IdentityReport {
  LatticeVector y;
  std::int64_t max_degree = 0;
  std::int64_t min_chi = 0;
  std::size_t compared = 0;
  std::vector<IdentityMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Checks e^F ←y y = y →y e^F coefficient-for-coefficient on the window
// {degree <= max_degree, chi >= min_chi}.  e^F is assembled one chi step
// deeper so that every source of a compared term is inside the truncation;
// any mismatch is therefore a genuine failure.
IdentityReport verify_identity(InvariantTable& table, LatticeVector y, std::int64_t max_degree,
                               std::int64_t min_chi);

// Solves all connected configurations within the bounds, in (degree
// ascending, chi descending) order.
InvariantTable build_invariant_table(std::int64_t max_degree, std::int64_t min_chi);
void extend_invariant_table(InvariantTable& table, std::int64_t max_degree, std::int64_t min_chi);

// Default incoming vectors exercised by the verification command: small, and
// covering both boundary exits of the sweeps.
std::vector<LatticeVector> default_verification_incomings();

}  // namespace tropgw
