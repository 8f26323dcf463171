#include <doctest.h>

#include "altsurg/error.hpp"
#include "altsurg/surgery.hpp"
#include "oracles.hpp"

using namespace altsurg;

TEST_CASE("torsion coefficients") {
  CHECK(torsion_coeffs(AlexPoly::parse("-1 1")) == std::vector<std::int64_t>{1, 0});
  for (auto t : torsion_coeffs(AlexPoly{})) CHECK(t == 0);
  CHECK_THROWS_AS(AlexPoly::parse("1 1"), InputError);
}

TEST_CASE("Alexander polynomial from torsion coefficients") {
  CHECK(alexander_from_torsion({1, 0, 0}) == AlexPoly::parse("-1 1"));
  CHECK(alexander_from_torsion({0, 0}) == AlexPoly{});
  for (auto [r, s] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 2}, {5, 4}, {7, 3}}) {
    AlexPoly p = AlexPoly::from(oracle::torus_alexander(r, s));
    CHECK(alexander_from_torsion(torsion_coeffs(p)) == p);
  }
}

TEST_CASE("V-sequences from stable coefficients") {
  auto trefoil = v_from_stable({2});
  CHECK(trefoil.genus == 1);
  CHECK(trefoil.V.at(0) == 1);
  CHECK(trefoil.V.at(1) == 0);
  auto unknot = v_from_stable({});
  for (int k = 0; k < 4; ++k) CHECK(unknot.V.at(k) == 0);
}

TEST_CASE("V-sequences agree with brute force") {
  for (const auto& stable : std::vector<Coeffs>{{2}, {3}, {2, 2}, {2, 3}, {2, 4}, {3, 3}, {2, 2, 2}}) {
    int ones = minimal_ones(stable);
    Coeffs sigma(ones, 1);
    sigma.insert(sigma.end(), stable.begin(), stable.end());
    auto v = oracle::v_brute(sigma);
    auto stats = v_from_stable(stable, ones);
    for (std::size_t k = 0; k < v.size(); ++k) CHECK(stats.V.at(static_cast<std::int64_t>(k)) == v[k]);
  }
}

TEST_CASE("first torsion jumps below V_0") {
  int checked = 0;
  for (const auto& stable : std::vector<Coeffs>{{3, 4}, {4, 5}, {3, 5, 6}, {2, 4, 5}}) {
    auto stats = v_from_stable(stable);
    Coeffs rho(stable.rbegin(), stable.rend());  // descending
    if (stats.V.at(0) > 2) {
      ++checked;
      CHECK(stats.T[1] == rho[0]);
      CHECK(stats.T[2] == rho[0] + rho[1]);
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("L-space knots: V equals the torsion coefficients") {
  auto t43 = torus_tools(4, 3);
  auto torsion = torsion_coeffs(t43.alexander);
  auto stats = v_from_stable({3});
  CHECK(stats.genus == t43.genus);
  for (std::size_t k = 0; k < torsion.size(); ++k) CHECK(stats.V.at(static_cast<std::int64_t>(k)) == torsion[k]);
}

TEST_CASE("recovering stable coefficients") {
  CHECK(recover_stable(VSeq::parse("1 0")) == Coeffs{2});
  CHECK(recover_stable(VSeq::parse("0")).empty());
  for (const auto& stable : std::vector<Coeffs>{{2}, {3}, {2, 2}, {2, 4}, {3, 4}, {2, 3, 5}, {4, 4, 6}})
    CHECK(recover_stable(v_from_stable(stable).V) == stable);
  CHECK_THROWS_AS(VSeq::parse("0 1"), InputError);
}

TEST_CASE("lens space d-invariants") {
  auto d3 = lens_d_by_label(Slope(3, 1));
  REQUIRE(d3.size() == 3);
  std::vector<Rational> sorted = d3;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<Rational>{Rational(-1, 6), Rational(-1, 6), Rational(1, 2)});
  auto d1 = lens_d_by_label(Slope(1, 1));
  REQUIRE(d1.size() == 1);
  CHECK(d1[0] == Rational(0));
  for (std::int64_t p = 2; p <= 15; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      Slope s(p, q);
      if (s.q != q) continue;
      auto d = lens_d_by_label(s);
      for (std::int64_t i = 0; i < p; ++i) CHECK(d[i] == oracle::lens_d(p, q, i));
    }
}

TEST_CASE("d-invariants are conjugation symmetric") {
  for (auto slope : {Slope(7, 2), Slope(107, 5), Slope(21, 1), Slope(11, 4)}) {
    auto classes = lens_d_invariants(slope);
    auto cf = neg_cf_expand(slope);
    for (const auto& cls : classes) {
      IntVector minus = neg(cls.c);
      std::int64_t label = spinc_label(minus, cf);
      CHECK(classes[label].d == cls.d);
    }
  }
}

TEST_CASE("surgery d-invariants") {
  auto trefoil = surgery_d_invariants(Slope(1, 1), VSeq::parse("1 0"));
  REQUIRE(trefoil.size() == 1);
  CHECK(trefoil[0] == Rational(-2));
  auto slope = Slope(7, 2);
  CHECK(surgery_d_invariants(slope, VSeq::parse("0")) == lens_d_by_label(slope));
}

TEST_CASE("correction terms follow the labelling") {
  VSeq V = v_from_stable({2, 4}).V;
  for (auto slope : {Slope(107, 5), Slope(23, 1), Slope(43, 2)}) {
    auto cf = neg_cf_expand(slope);
    for (const auto& cls : lens_d_invariants(slope)) {
      if (!in_M(cls.c, cf)) continue;
      CHECK(eval_correction(cls.c, cf, V) == 2 * V.at(correction_index(slope, cls.label)));
    }
  }
}

TEST_CASE("slope windows and genus bounds") {
  auto w = slope_window({2});
  CHECK(w.N == 6);
  CHECK(w.lo == 5);
  CHECK(w.hi == 7);
  auto w2 = slope_window({2, 4});
  CHECK(w2.N == 22);
  CHECK(w2.lo == 21);
  CHECK(w2.hi == 23);
  CHECK(w2.contains(Rational(107, 5)));
  CHECK_THROWS_AS(slope_window({}), InputError);
  CHECK(rasmussen_bound_ok(Rational(7), 1));
  CHECK_FALSE(rasmussen_bound_ok(Rational(8), 1));
}

TEST_CASE("Greene bound") {
  CHECK(greene_lower_bound(1).excludes(Rational(49, 10)));
  CHECK_FALSE(greene_lower_bound(1).excludes(Rational(5)));
  CHECK_FALSE(greene_lower_bound(0).excludes(Rational(1, 2)));
  // 6 + (1 + sqrt 73)/2 is about 10.77.
  CHECK(greene_lower_bound(3).excludes(Rational(21, 2)));
  CHECK_FALSE(greene_lower_bound(3).excludes(Rational(11)));
}

TEST_CASE("torus knot data") {
  auto t32 = torus_tools(3, 2);
  CHECK(t32.genus == 1);
  CHECK(t32.unknotting == 1);
  CHECK(t32.char_slope_threshold == Rational(43, 4));
  CHECK(torus_tools(4, 3).unknotting == 3);
  for (auto [r, s] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 4}, {7, 2}, {11, 2}})
    CHECK(torus_tools(r, s).alexander.a == oracle::torus_alexander(r, s));
  CHECK_THROWS_AS(torus_tools(4, 2), InputError);
}
