#include <doctest.h>

#include <fstream>
#include <sstream>

#include "altsurg/error.hpp"
#include "altsurg/knotdiag.hpp"
#include "oracles.hpp"

using namespace altsurg;

namespace {

PDCode load(const std::string& name) {
  std::ifstream in(std::string(ALTSURG_TEST_DATA) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return PDCode::parse(ss.str());
}

}  // namespace

TEST_CASE("PD parsing") {
  PDCode trefoil = load("trefoil.pd");
  CHECK(trefoil.size() == 3);
  CHECK(trefoil.components() == 1);
  CHECK(PDCode::parse(trefoil.str()).crossings == trefoil.crossings);
  PDCode unknot = PDCode::parse("");
  CHECK(unknot.size() == 0);
  CHECK(unknot.components() == 1);
  CHECK_THROWS_AS(PDCode::parse("X[1,1,1,2]"), InputError);
  CHECK_THROWS_AS(PDCode::parse("X[1,2,3]"), InputError);
  CHECK_THROWS_AS(PDCode::parse("X[1,2,3,4]"), InputError);
}

TEST_CASE("trefoil colouring and Goeritz form") {
  auto d = color_and_white_graph(load("trefoil.pd"));
  CHECK(d.diagram.alternating);
  CHECK(d.diagram.faces.size() == 5);
  CHECK(d.goeritz.white_graph.n == 2);
  CHECK(d.goeritz.white_graph.multiplicity(0, 1) == 3);
  CHECK(d.goeritz.goeritz.gram == IntMatrix{{3}});
  CHECK(signature(d) == -2);
  CHECK(determinant(d) == 3);
  CHECK(is_reduced(d));
  auto m = color_and_white_graph(mirror(load("trefoil.pd")));
  CHECK(signature(m) == 2);
  CHECK(determinant(m) == 3);
}

TEST_CASE("unknot diagram") {
  auto d = color_and_white_graph(PDCode::parse(""));
  CHECK(d.goeritz.goeritz.rank() == 0);
  CHECK(signature(d) == 0);
  CHECK(determinant(d) == 1);
}

TEST_CASE("8_10 Montesinos diagram") {
  auto d = color_and_white_graph(load("8_10.pd"));
  CHECK(d.diagram.alternating);
  CHECK(is_positive_definite(d.goeritz.goeritz));
  CHECK(determinant(d) == oracle::tree_count(oracle::montesinos_3_21_2()));
  CHECK(determinant(d) == 27);
}

TEST_CASE("diagrams built from plane graphs") {
  for (const auto& c : std::vector<std::vector<int>>{{3}, {2, 2}, {1, 1, 3}, {2, 1, 2}, {3, 2}, {2, 3, 1, 2}}) {
    Multigraph g = oracle::two_bridge_graph(c);
    PDCode pd = pd_from_planar_graph(g);
    auto d = color_and_white_graph(pd);
    CHECK(d.diagram.alternating);
    std::int64_t trees = oracle::tree_count(g);
    CHECK(determinant(d) == trees);
    std::vector<std::int64_t> rev(c.rbegin(), c.rend());
    CHECK(pos_cf_eval(rev).p == trees);
  }
}

TEST_CASE("signature changes sign under mirroring") {
  for (const auto& c : std::vector<std::vector<int>>{{3}, {5}, {2, 2}, {2, 1, 2}}) {
    PDCode pd = pd_from_planar_graph(oracle::two_bridge_graph(c));
    CHECK(signature(color_and_white_graph(mirror(pd))) == -signature(color_and_white_graph(pd)));
  }
}

TEST_CASE("rational tangle slopes") {
  Multigraph one(2);
  one.add_edge(0, 1);
  CHECK(tangle_slope_detect(one, {0, 1}) == TangleSlope{1, 1});
  Multigraph none(2);
  CHECK(tangle_slope_detect(none, {0, 1}) == TangleSlope{1, 0});
  // Twist region of r parallel crossings: slope 1/r.
  Multigraph twist(2);
  twist.add_edge(0, 1, 4);
  CHECK(tangle_slope_detect(twist, {0, 1}) == TangleSlope{1, 4});
  // Chain 0 - 1 - 2 with one interior region: q/p = [b_0, b_1]^-.
  Multigraph chain(3);
  chain.add_edge(0, 1);
  chain.add_edge(1, 2, 2);
  chain.add_edge(0, 2);
  auto s = tangle_slope_detect(chain, {0, 1, 2});
  REQUIRE(s.has_value());
  Slope qp = neg_cf_eval(std::vector<std::int64_t>{2, 3});
  CHECK(*s == TangleSlope{qp.q, qp.p});
  CHECK_THROWS_AS(tangle_slope_detect(one, {0}), InputError);
}

TEST_CASE("Montesinos slopes") {
  CHECK(montesinos_slope(4, 2, 3) == Slope(22, 5));
  CHECK(montesinos_slope(0, 1, 1) == Slope(1, 2));
}
