#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "tropgw/lattice.hpp"
#include "tropgw/rational.hpp"

namespace tropgw {

// One connected piece of a tropical curve configuration: the multiset of its
// outgoing contact vectors.  A possible incoming vector is tracked separately
// on the owning CurveConfig.
struct Component {
  std::vector<LatticeVector> vectors;
  friend auto operator<=>(const Component&, const Component&) = default;
};

struct IncomingMark {
  std::size_t component = 0;
  LatticeVector vector;
  friend auto operator<=>(const IncomingMark&, const IncomingMark&) = default;
};

// A (possibly disconnected) rigid tropical curve: a partitioned multiset of
// outgoing vectors plus at most one incoming vector attached to one component.
// A component may consist of the incoming vector alone, in which case its
// outgoing list is empty.
struct CurveConfig {
  std::vector<Component> components;
  std::optional<IncomingMark> incoming;

  bool outgoing_only() const { return !incoming.has_value(); }
  bool empty() const { return components.empty() && !incoming.has_value(); }
  friend auto operator<=>(const CurveConfig&, const CurveConfig&) = default;
};

// Throws std::invalid_argument when a type invariant is broken: an outgoing
// vector outside the universal cone, an invalid incoming vector, an incoming
// mark referencing a missing component, or an empty unmarked component.
void validate(const CurveConfig& c);

// Unique representative of the isomorphism class: vectors sorted within each
// component, components sorted by their sorted vector lists (the marked
// component first among equals).  Validates.
CurveConfig canonicalize(const CurveConfig& c);

// |Aut| of the partitioned multiset: identical components may be permuted and
// repeated vectors permuted within a component; the incoming vector is fixed.
Integer automorphism_order(const CurveConfig& c);

// Genus forced by rigidity on one component.  Pass the incoming vector when
// this component carries it.
std::int64_t genus(const Component& comp, const std::optional<LatticeVector>& incoming = std::nullopt);

std::int64_t degree(const CurveConfig& c);

std::int64_t euler_characteristic(const Component& comp,
                                  const std::optional<LatticeVector>& incoming = std::nullopt);
std::int64_t euler_characteristic(const CurveConfig& c);

// Total sweep order: result[i] ∧ result[j] <= 0 for i < j, parallel vectors in
// lexicographic order (stable).  All inputs must lie in the universal cone.
std::vector<LatticeVector> sort_for_sweep(std::vector<LatticeVector> vs);

// Convenience constructors; both canonicalize.
CurveConfig connected_config(std::vector<LatticeVector> vectors);
CurveConfig outgoing_config(std::vector<std::vector<LatticeVector>> components);

// Exhaustive enumeration under the standard finiteness bounds (degree bounded
// above, Euler characteristic bounded below).  Results are canonical, sorted,
// duplicate-free.  enumerate_outgoing_configs includes the empty config.
std::vector<CurveConfig> enumerate_connected_configs(std::int64_t max_degree, std::int64_t min_chi);
std::vector<CurveConfig> enumerate_outgoing_configs(std::int64_t max_degree, std::int64_t min_chi);

}  // namespace tropgw
