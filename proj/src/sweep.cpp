#include "tropgw/sweep.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropgw {

std::vector<SweepEntry> sweep_sequence(const CurveConfig& src) {
  CurveConfig canon = canonicalize(src);
  if (!canon.outgoing_only())
    throw std::invalid_argument("sweep_sequence: source must be outgoing-only");
  std::vector<SweepEntry> entries;
  for (std::size_t i = 0; i < canon.components.size(); ++i)
    for (LatticeVector v : canon.components[i].vectors) entries.push_back({v, i});
  std::sort(entries.begin(), entries.end(), [](const SweepEntry& x, const SweepEntry& y) {
    if (x.vector != y.vector) return sweep_precedes(x.vector, y.vector);
    return x.component < y.component;
  });
  return entries;
}

namespace {

using Mask = std::uint64_t;

struct Expansion {
  SweepSide side;
  const std::vector<SweepEntry>* entries;
  std::size_t component_count;
  LatticeVector y;
  FormalSum result;

  void emit(LatticeVector arrow, Mask arrow_classes, Mask consumed, const Integer& coeff) {
    const LatticeVector drop = side == SweepSide::left ? LatticeVector{-1, 0} : LatticeVector{0, -1};
    std::optional<LatticeVector> exit_vector;
    if (arrow == drop) {
      // dropped; the merged classes stay with the incoming edge
    } else if (in_universal_cone(arrow)) {
      exit_vector = arrow;
    } else {
      return;
    }
    CurveConfig out;
    std::vector<Component> merged_survivors(component_count);
    for (std::size_t i = 0; i < entries->size(); ++i)
      if (!(consumed & (Mask{1} << i)))
        merged_survivors[(*entries)[i].component].vectors.push_back((*entries)[i].vector);
    Component incoming_component;
    for (std::size_t c = 0; c < component_count; ++c) {
      if (arrow_classes & (Mask{1} << c)) {
        auto& vs = incoming_component.vectors;
        vs.insert(vs.end(), merged_survivors[c].vectors.begin(), merged_survivors[c].vectors.end());
      } else {
        out.components.push_back(std::move(merged_survivors[c]));
      }
    }
    if (exit_vector) incoming_component.vectors.push_back(*exit_vector);
    out.incoming = IncomingMark{out.components.size(), y};
    out.components.push_back(std::move(incoming_component));
    result.add_term(canonicalize(out), Rational(coeff));
  }

  // The arrow walks the sequence (right to left for the left sweep, left to
  // right for the right sweep) and at each slot either passes or consumes.
  void walk(std::size_t remaining, LatticeVector arrow, Mask arrow_classes, Mask consumed,
            Integer coeff) {
    if (remaining == 0) {
      emit(arrow, arrow_classes, consumed, coeff);
      return;
    }
    std::size_t pos = side == SweepSide::left ? remaining - 1 : entries->size() - remaining;
    const SweepEntry& e = (*entries)[pos];
    walk(remaining - 1, arrow, arrow_classes, consumed, coeff);
    std::int64_t w = side == SweepSide::left ? wedge(e.vector, arrow) : wedge(arrow, e.vector);
    if (w > 0)
      walk(remaining - 1, arrow + e.vector, arrow_classes | (Mask{1} << e.component),
           consumed | (Mask{1} << pos), coeff * w);
  }
};

}  // namespace

FormalSum expand_ordered(SweepSide side, const std::vector<SweepEntry>& entries,
                         std::size_t component_count, LatticeVector y) {
  if (!is_valid_incoming(y))
    throw std::invalid_argument("expand: " + to_string(y) + " is not a valid incoming vector");
  if (component_count >= 63 || entries.size() >= 63)
    throw std::invalid_argument("expand: configuration too large");
  for (const SweepEntry& e : entries) {
    if (!in_universal_cone(e.vector))
      throw std::invalid_argument("expand: source vector " + to_string(e.vector) +
                                  " outside the universal cone");
    if (e.component >= component_count)
      throw std::invalid_argument("expand: sweep entry references missing component");
  }
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (wedge(entries[i].vector, entries[j].vector) > 0)
        throw std::invalid_argument("expand: sequence is not in sweep order");

  Expansion ex{side, &entries, component_count, y, {}};
  const Mask incoming_class = Mask{1} << component_count;
  ex.walk(entries.size(), y, incoming_class, 0, Integer(1));
  return std::move(ex.result);
}

FormalSum expand_left(const CurveConfig& src, LatticeVector y) {
  CurveConfig canon = canonicalize(src);
  return expand_ordered(SweepSide::left, sweep_sequence(canon), canon.components.size(), y);
}

FormalSum expand_right(LatticeVector y, const CurveConfig& src) {
  CurveConfig canon = canonicalize(src);
  return expand_ordered(SweepSide::right, sweep_sequence(canon), canon.components.size(), y);
}

FormalSum expand_sum(SweepSide side, const FormalSum& series, LatticeVector y) {
  FormalSum total;
  for (const auto& [config, coeff] : series.terms()) {
    FormalSum expanded =
        side == SweepSide::left ? expand_left(config, y) : expand_right(y, config);
    expanded *= coeff;
    total += expanded;
  }
  return total;
}

}  // namespace tropgw
