#include <doctest.h>

#include "altsurg/cmlat.hpp"
#include "altsurg/error.hpp"
#include "altsurg/intlat.hpp"

using namespace altsurg;

namespace {

GramLattice gram(IntMatrix m) { return GramLattice(std::move(m)); }

}  // namespace

TEST_CASE("positive definiteness") {
  CHECK(is_positive_definite(gram({{3}})));
  CHECK(is_positive_definite(gram({{2, -1}, {-1, 2}})));
  CHECK_FALSE(is_positive_definite(gram({{1, 2}, {2, 1}})));
}

TEST_CASE("discriminants") {
  CHECK(discriminant(gram({{1}})) == 1);
  CHECK(discriminant(cm_build(Slope(107, 5), {2, 4}).gram) == 107);
  IntMatrix tri{{5, -1, 0, 0, 0}, {-1, 2, -1, 0, 0}, {0, -1, 2, -1, 0}, {0, 0, -1, 2, -1}, {0, 0, 0, -1, 2}};
  CHECK(discriminant(gram(tri)) == 21);
}

TEST_CASE("determinant is exact on integer matrices") {
  CHECK(determinant({{2, 1}, {1, 2}}) == 3);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
}

TEST_CASE("orthogonal complements") {
  // <f_1 + e_0, e_1 - e_0> in Z^3 = <e_0, e_1, f_1>.
  auto c = orthogonal_complement({{1, 0, 1}, {-1, 1, 0}}, 3);
  REQUIRE(c.size() == 1);
  CHECK((c[0] == IntVector{1, 1, -1} || c[0] == IntVector{-1, -1, 1}));
  auto d = orthogonal_complement({{1, 0}}, 2);
  REQUIRE(d.size() == 1);
  CHECK((d[0] == IntVector{0, 1} || d[0] == IntVector{0, -1}));
  // <f_1 + f_2 + 2 f_3> contains f_1 - f_2 and f_1 + f_2 - f_3.
  auto e = orthogonal_complement({{1, 1, 2}}, 3);
  REQUIRE(e.size() == 2);
  CHECK(integer_coordinates(e, {1, -1, 0}).has_value());
  CHECK(integer_coordinates(e, {1, 1, -1}).has_value());
  CHECK_FALSE(integer_coordinates(e, {1, 0, 0}).has_value());
}

TEST_CASE("short vector enumeration") {
  CHECK(vectors_of_norm_at_most(gram({{3}}), 3).size() == 3);  // 0 and +-1
  auto a2 = vectors_of_norm_at_most(gram({{2, -1}, {-1, 2}}), 2);
  CHECK(a2.size() == 7);  // zero and the six roots
  CHECK(vectors_of_norm_at_most(gram({{2, -1}, {-1, 2}}), 2, {kDefaultBudget, true}).size() == 4);
  auto zero = vectors_of_norm_at_most(gram({{1}}), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == IntVector{0});
}

TEST_CASE("enumeration budget is a distinct error") {
  IntMatrix big(8, IntVector(8, 0));
  for (int i = 0; i < 8; ++i) big[i][i] = 1;
  CHECK_THROWS_AS(vectors_of_norm_at_most(gram(big), 8, {50, false}), BudgetExceeded);
}

TEST_CASE("isometries") {
  auto g = gram({{2, -1, 0}, {-1, 3, -1}, {0, -1, 4}});
  auto self = find_isometry(g, g);
  REQUIRE(self.has_value());
  CHECK(gram_of(self->matrix).size() == 3);
  CHECK_FALSE(find_isometry(gram({{3}}), gram({{2}})).has_value());
  auto a = cm_build(Slope(21, 1), {4});
  auto b = cm_build(Slope(21, 1), {2, 2, 2, 2, 2});
  auto iso = find_isometry(a.gram, b.gram);
  REQUIRE(iso.has_value());
  // The images reproduce the source Gram inside the target lattice.
  IntMatrix images_gram(iso->matrix.size(), IntVector(iso->matrix.size()));
  for (std::size_t i = 0; i < iso->matrix.size(); ++i)
    for (std::size_t j = 0; j < iso->matrix.size(); ++j)
      images_gram[i][j] = b.gram.pair(iso->matrix[i], iso->matrix[j]);
  CHECK(images_gram == a.gram.gram);
}

TEST_CASE("irreducible vectors and decomposability") {
  auto z2 = gram({{1, 0}, {0, 1}});
  CHECK(is_decomposable(z2));
  CHECK_FALSE(is_decomposable(gram({{2, -1}, {-1, 2}})));
  // A_2 has six irreducible vectors: the roots.
  CHECK(irreducible_vectors(gram({{2, -1}, {-1, 2}})).size() == 6);
  CHECK(is_irreducible(gram({{3}}), {1}));
}

TEST_CASE("signature of symmetric matrices") {
  CHECK(signature(IntMatrix{{1, 0}, {0, -1}}) == 0);
  CHECK(signature(IntMatrix{{2, 1}, {1, 2}}) == 2);
  CHECK(signature(IntMatrix{{-3}}) == -1);
}
