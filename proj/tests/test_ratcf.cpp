#include <doctest.h>

#include "altsurg/error.hpp"
#include "altsurg/ratcf.hpp"

using namespace altsurg;

TEST_CASE("slopes are reduced with the sign on the numerator") {
  Slope s(-10, -4);
  CHECK(s.p == 5);
  CHECK(s.q == 2);
  CHECK(Slope::parse("107/5") == Slope(107, 5));
  CHECK(Slope::parse("21") == Slope(21, 1));
  CHECK_THROWS_AS(Slope(1, 0), InputError);
  CHECK_THROWS_AS(Slope::parse("3/x"), InputError);
}

TEST_CASE("ceiling and remainder satisfy p/q = n - r/q") {
  Slope s(107, 5);
  CHECK(s.ceil() == 22);
  CHECK(s.r() == 3);
  CHECK(Slope(21, 1).r() == 0);
}

TEST_CASE("negative continued fraction expansion") {
  CHECK(neg_cf_expand(Slope(107, 5)).a == std::vector<std::int64_t>{22, 2, 3});
  CHECK(neg_cf_expand(Slope(21, 1)).a == std::vector<std::int64_t>{21});
  CHECK(neg_cf_expand(Slope(7, 5)).a == std::vector<std::int64_t>{2, 2, 3});
}

TEST_CASE("negative continued fraction evaluation") {
  CHECK(neg_cf_eval(std::vector<std::int64_t>{22, 2, 3}) == Slope(107, 5));
  CHECK(neg_cf_eval(std::vector<std::int64_t>{9}) == Slope(9, 1));
  CHECK(neg_cf_eval(std::vector<std::int64_t>{3, 2}) == Slope(5, 2));
  CHECK_THROWS_AS(neg_cf_eval(std::vector<std::int64_t>{1, 1, 1}), InputError);
}

TEST_CASE("expansion and evaluation are inverse") {
  for (std::int64_t p = 2; p < 80; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      Slope s(p, q);
      if (s.q != q) continue;
      CHECK(neg_cf_eval(neg_cf_expand(s)) == s);
    }
}

TEST_CASE("positive continued fraction evaluation") {
  CHECK(pos_cf_eval({2}) == Slope(2, 1));
  CHECK(pos_cf_eval({1, 2}) == Slope(3, 2));
  CHECK(pos_cf_eval({0, 1}) == Slope(1, 1));
}

TEST_CASE("integer lists") {
  CHECK(parse_int_list("2,4") == std::vector<std::int64_t>{2, 4});
  CHECK(parse_int_list("[1, -2 3]") == std::vector<std::int64_t>{1, -2, 3});
  CHECK(parse_int_list("").empty());
  CHECK_THROWS_AS(parse_int_list("1,a"), InputError);
}

TEST_CASE("rationals compare with integers without recursion") {
  Rational x(6, 3);
  CHECK(x == Rational(2));
  CHECK(x.numerator() != 0);
  CHECK(to_string(Rational(-1, 6)) == "-1/6");
  CHECK(to_string(Rational(4, 2)) == "2");
}
