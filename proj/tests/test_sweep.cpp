#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "tropgw/json_io.hpp"
#include "tropgw/solver.hpp"

using namespace tropgw;
using namespace tropgw::testutil;

TEST_CASE("left sweep of the empty configuration") {
  FormalSum out = expand_left(CurveConfig{}, {-1, 0});
  CHECK(out.size() == 1);
  CHECK(out.coefficient_of(marked({{}}, 0, {-1, 0})) == 1);

  CHECK(expand_left(CurveConfig{}, {-2, 1}).size() == 0);
}

TEST_CASE("left sweep consuming a double cover") {
  // (2,-2) merges with the arrow and exits as (1,1) with multiplicity 4.
  FormalSum out = expand_left(cc({{2, -2}}), {-1, 3});
  CHECK(out.size() == 1);
  CHECK(out.coefficient_of(marked({{{1, 1}}}, 0, {-1, 3})) == 4);
}

TEST_CASE("left sweep past a surviving vector") {
  FormalSum out = expand_left(cc({{1, -1}}), {-1, 0});
  CHECK(out.coefficient_of(marked({{}}, 0, {-1, 0})) == 0);
  CHECK(out.size() == 1);
  CHECK(out.coefficient_of(marked({{{1, -1}}, {}}, 1, {-1, 0})) == 1);
}

TEST_CASE("right sweep of known sources") {
  FormalSum a = expand_right({-1, 0}, cc({{1, -1}}));
  CHECK(a.size() == 1);
  CHECK(a.coefficient_of(marked({{}}, 0, {-1, 0})) == 1);

  FormalSum b = expand_right({-2, 1}, cc({{2, -2}}));
  CHECK(b.size() == 1);
  CHECK(b.coefficient_of(marked({{}}, 0, {-2, 1})) == 2);

  CHECK(expand_right({-1, 0}, CurveConfig{}).size() == 0);
}

TEST_CASE("expansions validate their inputs") {
  CHECK_THROWS_AS(expand_left(cc({{1, -1}}), {-1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(expand_right({0, 1}, cc({{1, -1}})), std::invalid_argument);
  CHECK_THROWS_AS(expand_left(marked({{}}, 0, {-1, 0}), {-1, 0}), std::invalid_argument);
}

TEST_CASE("expand_sum is the linear extension") {
  InvariantTable table;
  FormalSum series = assemble_exp(table, 1, 1);
  FormalSum right = expand_sum(SweepSide::right, series, {-1, 0});
  CHECK(right.coefficient_of(marked({{}}, 0, {-1, 0})) == 1);

  FormalSum just_empty;
  just_empty.add_term(CurveConfig{}, 1);
  FormalSum left = expand_sum(SweepSide::left, just_empty, {-2, 1});
  CHECK(left.coefficient_of(marked({{}}, 0, {-2, 1})) == 0);

  // The defining equation of n_{(2,-2)} read backwards: the two degree-2
  // sources cancel at {incoming(-2,1)}.
  FormalSum series2;
  series2.add_term(cc({{2, -2}}), Rational(-1, 4));
  series2.add_term(split({{{1, -1}}, {{1, -1}}}), Rational(1, 2));
  FormalSum both = expand_sum(SweepSide::right, series2, {-2, 1});
  CHECK(both.coefficient_of(marked({{}}, 0, {-2, 1})) == 0);
}

TEST_CASE("degree and connectivity bookkeeping") {
  std::vector<LatticeVector> ys = {{-1, 0}, {-1, 1}, {-2, 1}, {-2, -1}, {-1, 3}, {-3, 0}};
  for (const CurveConfig& src : enumerate_outgoing_configs(3, -5)) {
    for (LatticeVector y : ys) {
      for (auto side : {SweepSide::left, SweepSide::right}) {
        FormalSum out =
            side == SweepSide::left ? expand_left(src, y) : expand_right(y, src);
        for (const auto& [term, coeff] : out.terms()) {
          CHECK(coeff > 0);
          if (side == SweepSide::right) {
            CHECK(degree(term) == degree(src));
          } else {
            bool same = degree(term) == degree(src);
            bool plus_one = degree(term) == degree(src) + 1;
            CHECK((same || plus_one));
          }
          // Consumption never splits a component: every unmarked output
          // component is literally a component of the source.
          REQUIRE(term.incoming.has_value());
          CHECK(term.incoming->vector == y);
          std::vector<Component> pool = src.components;
          for (std::size_t i = 0; i < term.components.size(); ++i) {
            if (i == term.incoming->component) continue;
            auto it = std::find(pool.begin(), pool.end(), term.components[i]);
            REQUIRE(it != pool.end());
            pool.erase(it);
          }
        }
      }
    }
  }
}

TEST_CASE("arrow accumulation accounts for every output term") {
  // y plus the consumed total is what the arrow ends as: (-1,0)/(0,-1) for a
  // drop (left degree jumps by one), zero net for a universal-cone exit.
  for (const CurveConfig& src : enumerate_outgoing_configs(2, -4)) {
    LatticeVector src_sum{0, 0};
    for (const Component& comp : src.components)
      for (LatticeVector v : comp.vectors) src_sum = src_sum + v;
    for (LatticeVector y : {LatticeVector{-1, 0}, LatticeVector{-1, 2}, LatticeVector{-2, 1}}) {
      for (auto side : {SweepSide::left, SweepSide::right}) {
        FormalSum out =
            side == SweepSide::left ? expand_left(src, y) : expand_right(y, src);
        for (const auto& [term, coeff] : out.terms()) {
          LatticeVector out_sum{0, 0};
          for (const Component& comp : term.components)
            for (LatticeVector v : comp.vectors) out_sum = out_sum + v;
          LatticeVector residue = y + src_sum - out_sum;
          LatticeVector drop = side == SweepSide::left ? LatticeVector{-1, 0}
                                                       : LatticeVector{0, -1};
          std::int64_t jump = degree(term) - degree(src);
          if (residue == drop) {
            CHECK(jump == (side == SweepSide::left ? 1 : 0));
          } else {
            CHECK(residue == LatticeVector{0, 0});
            CHECK(jump == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("sweep results do not depend on the order of parallel vectors") {
  std::mt19937 rng(20240817);
  std::vector<LatticeVector> ys = {{-1, 0}, {-1, 1}, {-2, 1}, {-1, 3}};
  auto pool = enumerate_outgoing_configs(3, -5);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int reordered_trials = 0;
  while (reordered_trials < 250) {
    const CurveConfig& src = pool[pick(rng)];
    std::vector<SweepEntry> seq = shuffled_sweep_order(src, rng);
    LatticeVector y = ys[static_cast<std::size_t>(reordered_trials) % ys.size()];
    for (auto side : {SweepSide::left, SweepSide::right}) {
      FormalSum canonical =
          side == SweepSide::left ? expand_left(src, y) : expand_right(y, src);
      FormalSum permuted = expand_ordered(side, seq, src.components.size(), y);
      CHECK(canonical == permuted);
    }
    ++reordered_trials;
  }
}

TEST_CASE("left and right expansions of e^F agree on all small windows") {
  InvariantTable table;
  for (std::int64_t y1 = -3; y1 <= -1; ++y1)
    for (std::int64_t y2 = -4; y2 <= 4; ++y2) {
      LatticeVector y{y1, y2};
      if (!is_valid_incoming(y)) continue;
      IdentityReport report = verify_identity(table, y, 3, -7);
      CHECK(report.ok());
    }
}
