#include <doctest.h>

#include <random>

#include "altsurg/cmlat.hpp"
#include "altsurg/error.hpp"
#include "oracles.hpp"

using namespace altsurg;

TEST_CASE("changemaker condition") {
  CHECK(changemaker_check({1, 2, 4}));
  CHECK_FALSE(changemaker_check({1, 3}));
  CHECK(changemaker_check({1, 1, 2, 4}));
  CHECK_FALSE(changemaker_check({}));
  CHECK_FALSE(changemaker_check({2}));
}

TEST_CASE("changemaker condition agrees with subset sums") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    int t = std::uniform_int_distribution<int>(1, 7)(rng);
    Coeffs sigma(t);
    for (auto& x : sigma) x = std::uniform_int_distribution<int>(1, 9)(rng);
    std::sort(sigma.begin(), sigma.end());
    CHECK(changemaker_check(sigma) == oracle::subset_sums_cover(sigma));
  }
}

TEST_CASE("coefficients from stable coefficients") {
  CHECK(coeffs_from_stable(Slope(107, 5), {2, 4}) == Coeffs{1, 2, 4});
  CHECK(coeffs_from_stable(Slope(21, 1), {4}) == Coeffs{1, 1, 1, 1, 1, 4});
  CHECK(coeffs_from_stable(Slope(3, 2), {}) == Coeffs{1});
  CHECK_THROWS_AS(coeffs_from_stable(Slope(5, 1), {4}), InputError);
  CHECK_THROWS_AS(coeffs_from_stable(Slope(107, 5), {5}), InputError);
}

TEST_CASE("the 107/5 lattice") {
  auto lat = cm_build(Slope(107, 5), {2, 4});
  CHECK(lat.cf.a == Coeffs{22, 2, 3});
  CHECK(lat.s == 3);
  CHECK(lat.N == 7);
  // Coordinates e_0..e_3 then f_1..f_3.
  CHECK(lat.w[0] == IntVector{1, 0, 0, 0, 1, 2, 4});
  REQUIRE(lat.mu.size() == 2);
  CHECK(lat.mu[0] == IntVector{1, 1, 1, 0, 0, 0, 0});
  CHECK(lat.mu[1] == IntVector{0, 0, -1, 1, 0, 0, 0});
  CHECK(dot(lat.w[0], lat.w[0]) == 22);
  CHECK(discriminant(lat.gram) == 107);
  CHECK(fractional_gram(lat).gram == IntMatrix{{3, -1}, {-1, 2}});
  for (const auto& b : lat.basis) CHECK(lat.contains(b));
}

TEST_CASE("small changemaker lattices") {
  auto trefoil = cm_build(Slope(3, 2), {});
  CHECK(trefoil.rank() == 1);
  CHECK(trefoil.gram.gram == IntMatrix{{3}});
  CHECK(fractional_gram(trefoil).gram == IntMatrix{{2}});
  auto lens = cm_build(Slope(21, 1), {4});
  IntMatrix tri{{5, -1, 0, 0, 0}, {-1, 2, -1, 0, 0}, {0, -1, 2, -1, 0}, {0, 0, -1, 2, -1}, {0, 0, 0, -1, 2}};
  // Same lattice as the tridiagonal form, with the basis listed in another order.
  CHECK(find_isometry(lens.gram, GramLattice(tri)).has_value());
  CHECK(discriminant(lens.gram) == 21);
  CHECK_THROWS_AS(fractional_gram(lens), InputError);
}

TEST_CASE("half-integer slopes have a single fractional vector") {
  for (std::int64_t n = 2; n < 30; ++n) {
    auto lat = cm_build(Slope(2 * n - 1, 2), {});
    CHECK(fractional_gram(lat).gram == IntMatrix{{2}});
    CHECK(discriminant(lat.gram) == 2 * n - 1);
  }
}

TEST_CASE("discriminant equals the numerator of the slope") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    Coeffs stable;
    int k = std::uniform_int_distribution<int>(0, 3)(rng);
    std::int64_t budget = 1;
    for (int i = 0; i < k; ++i) {
      std::int64_t x = std::uniform_int_distribution<std::int64_t>(2, std::max<std::int64_t>(2, budget + 1))(rng);
      stable.push_back(x);
      budget += x;
    }
    std::sort(stable.begin(), stable.end());
    std::int64_t squares = 0;
    for (auto x : stable) squares += x * x;
    std::int64_t q = std::uniform_int_distribution<std::int64_t>(1, 6)(rng);
    std::int64_t p = (squares + 3) * q + std::uniform_int_distribution<std::int64_t>(0, q - 1)(rng);
    Slope slope(p, q);
    if (slope.q != q) continue;
    ChangemakerLattice lat;
    try {
      lat = cm_build(slope, stable);
    } catch (const InputError&) {
      continue;
    }
    CHECK(is_positive_definite(lat.gram));
    CHECK(discriminant(lat.gram) == p);
  }
}

TEST_CASE("tightness") {
  auto t = tightness({1, 2, 4});
  CHECK(t.tight);
  CHECK(t.tight_indices == std::vector<int>{2, 3});
  CHECK_FALSE(tightness({1, 1, 1}).tight);
  CHECK_FALSE(tightness({1, 1, 2, 2}).tight);
}

TEST_CASE("greedy subsets") {
  auto s = greedy_subset({1, 2, 4}, 5, 3);
  REQUIRE(s.has_value());
  std::int64_t sum = 0;
  for (int i : *s) sum += Coeffs{1, 2, 4}[i - 1];
  CHECK(sum == 5);
  CHECK_FALSE(greedy_subset({1, 2, 4}, 8, 3).has_value());
}

TEST_CASE("genus from stable coefficients") {
  CHECK(genus_from_stable({}) == 0);
  CHECK(genus_from_stable({2}) == 1);
  CHECK(genus_from_stable({2, 4}) == 7);
}
