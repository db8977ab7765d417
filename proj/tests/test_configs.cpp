#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"
#include "tropgw/json_io.hpp"

using namespace tropgw;
using namespace tropgw::testutil;

TEST_CASE("canonical form is insertion-order independent") {
  CurveConfig x = cc({{2, -2}, {1, 1}});
  CurveConfig y = cc({{1, 1}, {2, -2}});
  CHECK(x == y);

  CurveConfig p = split({{{1, -1}}, {{1, -1}}});
  CurveConfig q = split({{{1, -1}}, {{1, -1}}});
  CHECK(p == q);

  CHECK(canonicalize(CurveConfig{}) == CurveConfig{});
}

TEST_CASE("canonicalize is idempotent over an enumerated family") {
  for (const CurveConfig& c : enumerate_outgoing_configs(3, -5)) CHECK(canonicalize(c) == c);
}

TEST_CASE("canonicalize rejects invariant violations") {
  CurveConfig bad_vector;
  bad_vector.components.push_back(Component{{{0, 1}}});
  CHECK_THROWS_AS(canonicalize(bad_vector), std::invalid_argument);

  CurveConfig bad_incoming;
  bad_incoming.components.push_back(Component{{{1, 0}}});
  bad_incoming.incoming = IncomingMark{0, {-1, -1}};
  CHECK_THROWS_AS(canonicalize(bad_incoming), std::invalid_argument);

  CurveConfig dangling;
  dangling.components.push_back(Component{{{1, 0}}});
  dangling.incoming = IncomingMark{3, {-1, 0}};
  CHECK_THROWS_AS(canonicalize(dangling), std::invalid_argument);

  CurveConfig hollow;
  hollow.components.push_back(Component{});
  CHECK_THROWS_AS(canonicalize(hollow), std::invalid_argument);
}

TEST_CASE("incoming-only components are allowed") {
  CurveConfig c = marked({{}}, 0, {-1, 0});
  CHECK(c.components.size() == 1);
  CHECK(c.components[0].vectors.empty());
  CHECK(c.incoming->vector == LatticeVector{-1, 0});
}

TEST_CASE("automorphism orders") {
  CHECK(automorphism_order(cc({{1, -1}, {1, -1}})) == 2);
  CHECK(automorphism_order(split({{{1, -1}}, {{1, -1}}})) == 2);
  CHECK(automorphism_order(cc({{1, 0}, {1, -2}})) == 1);
  CHECK(automorphism_order(split({{{1, -1}, {1, -1}}, {{1, -1}, {1, -1}}})) == 8);
  CHECK(automorphism_order(CurveConfig{}) == 1);
}

TEST_CASE("all-distinct configurations have trivial automorphisms") {
  CHECK(automorphism_order(cc({{1, 1}, {2, -2}, {3, 0}})) == 1);
  CHECK(automorphism_order(split({{{1, 1}}, {{2, -2}}})) == 1);
}

TEST_CASE("the marked component is fixed by automorphisms") {
  CurveConfig c = marked({{{1, -1}}, {{1, -1}}}, 0, {-1, 0});
  CHECK(automorphism_order(c) == 1);
}

TEST_CASE("genus of known components") {
  CHECK(genus(Component{{{2, -2}}}) == 0);
  CHECK(genus(Component{{{1, -4}, {1, 1}}}) == 0);
  CHECK(genus(Component{}, LatticeVector{-1, 0}) == 0);
  CHECK(genus(Component{{{1, -2}}}) == 1);
  CHECK(genus(Component{{{1, 1}}}) == -2);
}

TEST_CASE("degree of configurations") {
  CHECK(degree(cc({{1, 0}, {1, -2}})) == 2);
  CHECK(degree(marked({{}}, 0, {-2, 1})) == 2);
  CHECK(degree(CurveConfig{}) == 0);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(cc({{1, -1}})) == 1);
  CHECK(euler_characteristic(cc({{1, 1}})) == 5);
  CHECK(euler_characteristic(split({{{1, -1}}, {{1, -1}}})) == 2);
}

TEST_CASE("component chi agrees with the per-vector formula on outgoing-only components") {
  for (const CurveConfig& c : enumerate_connected_configs(4, -9)) {
    const Component& comp = c.components[0];
    std::int64_t direct = 0;
    for (LatticeVector v : comp.vectors) direct += 1 + 2 * v.a + 2 * v.b;
    CHECK(euler_characteristic(comp) == direct);
    CHECK(euler_characteristic(c) == direct);
  }
}

TEST_CASE("replacing (a,b) by (-a,-1-b) preserves degree and genus") {
  for (const CurveConfig& c : enumerate_connected_configs(3, -9)) {
    const auto& vs = c.components[0].vectors;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      LatticeVector v = vs[i];
      LatticeVector y{-v.a, -1 - v.b};
      if (!is_valid_incoming(y)) continue;
      std::vector<LatticeVector> rest = vs;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      CurveConfig replaced = marked({rest}, 0, y);
      CHECK(degree(replaced) == degree(c));
      CHECK(genus(Component{rest}, y) == genus(c.components[0]));
      CHECK(euler_characteristic(replaced) == euler_characteristic(c));
    }
  }
}

TEST_CASE("sweep order") {
  CHECK(sort_for_sweep({{1, -2}, {1, 0}}) == std::vector<LatticeVector>{{1, 0}, {1, -2}});
  CHECK(sort_for_sweep({{1, 1}, {1, -4}}) == std::vector<LatticeVector>{{1, 1}, {1, -4}});
  CHECK(sort_for_sweep({{2, -2}, {1, -1}}) == std::vector<LatticeVector>{{1, -1}, {2, -2}});
  CHECK_THROWS_AS(sort_for_sweep({{0, 1}}), std::invalid_argument);
}

TEST_CASE("sweep order is a valid total order on enumerated configs") {
  for (const CurveConfig& c : enumerate_connected_configs(4, -7)) {
    std::vector<LatticeVector> sorted = sort_for_sweep(c.components[0].vectors);
    for (std::size_t i = 0; i < sorted.size(); ++i)
      for (std::size_t j = i + 1; j < sorted.size(); ++j) CHECK(wedge(sorted[i], sorted[j]) <= 0);
  }
}

TEST_CASE("canonical JSON round trip") {
  for (const CurveConfig& c :
       {cc({{2, -2}, {1, 1}}), split({{{1, -1}}, {{1, -1}}}), CurveConfig{},
        marked({{{1, 1}}, {{1, -1}}}, 0, {-1, 3}), marked({{}}, 0, {-2, 1})}) {
    Json j = config_to_json(c);
    CHECK(config_from_json(j, /*require_canonical=*/true) == c);
  }
  CHECK(canonical_key(CurveConfig{}) == "{\"components\":[],\"incoming\":null}");
  CHECK(canonical_key(marked({{}}, 0, {-1, 0})) ==
        "{\"components\":[[]],\"incoming\":{\"component\":0,\"vector\":[-1,0]}}");
  // Tie-break: the marked component sorts first among equal outgoing lists.
  CHECK(canonical_key(marked({{{1, -1}}, {{1, -1}}}, 1, {-1, 0})) ==
        "{\"components\":[[[1,-1]],[[1,-1]]],\"incoming\":{\"component\":0,\"vector\":[-1,0]}}");
}

TEST_CASE("enumeration respects its bounds and finds the expected counts") {
  auto configs = enumerate_outgoing_configs(2, -1);
  for (const CurveConfig& c : configs) {
    CHECK(degree(c) <= 2);
    CHECK(euler_characteristic(c) >= -1);
    CHECK(c.outgoing_only());
  }
  CHECK(std::count(configs.begin(), configs.end(), CurveConfig{}) == 1);
  CHECK(std::count(configs.begin(), configs.end(), cc({{2, -2}})) == 1);
  CHECK(std::count(configs.begin(), configs.end(), split({{{1, -1}}, {{1, -1}}})) == 1);
  CHECK(std::count(configs.begin(), configs.end(), cc({{1, -1}, {1, -1}})) == 1);

  auto connected = enumerate_connected_configs(1, 1);
  CHECK(connected == std::vector<CurveConfig>{cc({{1, -1}}), cc({{1, 0}}), cc({{1, 1}})});
}
