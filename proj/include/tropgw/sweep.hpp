#pragma once

#include <cstdint>
#include <vector>

#include "tropgw/configs.hpp"
#include "tropgw/formal.hpp"

namespace tropgw {

enum class SweepSide { left, right };

// One slot of the sweep sequence: an outgoing vector together with the
// component it belongs to in the source configuration.
struct SweepEntry {
  LatticeVector vector;
  std::size_t component = 0;
};

// Canonical sweep order of all outgoing vectors of src (sort_for_sweep order,
// parallel ties by vector then component index).
std::vector<SweepEntry> sweep_sequence(const CurveConfig& src);

// Core expansion over an explicit sequence.  Any valid sweep order (entries[i]
// ∧ entries[j] <= 0 for i < j) must give the same result; exposed so tests can
// permute parallel vectors.  component_count is the number of components of
// the source; the incoming edge is class component_count.
FormalSum expand_ordered(SweepSide side, const std::vector<SweepEntry>& entries,
                         std::size_t component_count, LatticeVector y);

// Γ ←y y: the constrained edge enters from the right and moves left, either
// passing each vector (coefficient 1) or consuming it (coefficient
// max{v ∧ arrow, 0}, classes merged).  At the left end an arrow equal to
// (-1,0) is dropped; an arrow in the universal cone exits as a new outgoing
// vector; anything else kills the branch.
FormalSum expand_left(const CurveConfig& src, LatticeVector y);

// y →y Γ: mirror image, consuming with coefficient max{arrow ∧ v, 0} and
// terminating at the right end on (0,-1) or a universal-cone exit.
FormalSum expand_right(LatticeVector y, const CurveConfig& src);

// Linear extension to formal sums of outgoing-only configurations.
FormalSum expand_sum(SweepSide side, const FormalSum& series, LatticeVector y);

}  // namespace tropgw
