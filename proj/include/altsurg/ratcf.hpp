#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace altsurg {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

// Integers separated by whitespace and/or commas, optionally bracketed.
std::vector<std::int64_t> parse_int_list(const std::string& text);

// A reduced fraction p/q with the sign carried by the numerator.
struct Slope {
  std::int64_t p = 0;
  std::int64_t q = 1;

  Slope() = default;
  Slope(std::int64_t num, std::int64_t den);  // reduces; rejects den == 0

  static Slope parse(const std::string& text);  // "p/q" or "p"

  Rational value() const { return Rational(p, q); }
  bool is_integer() const { return q == 1; }
  // n = ceil(p/q) and r with p/q = n - r/q, 0 <= r < q.
  std::int64_t ceil() const;
  std::int64_t r() const { return ceil() * q - p; }

  std::string str() const;
  friend bool operator==(const Slope&, const Slope&) = default;
};

// Negative continued fraction [a_0, ..., a_l]^- = a_0 - 1/(a_1 - ...).
struct NegCF {
  std::vector<std::int64_t> a;

  std::string str() const;
  friend bool operator==(const NegCF&, const NegCF&) = default;
};

// Canonical expansion (a_0 >= 1, a_i >= 2) of a slope s >= 1.
NegCF neg_cf_expand(const Slope& s);

// Exact value of [a_0, ..., a_l]^-; throws on a zero denominator.
Slope neg_cf_eval(const std::vector<std::int64_t>& a);
inline Slope neg_cf_eval(const NegCF& cf) { return neg_cf_eval(cf.a); }

// Exact value of [a_1, ..., a_k]^+ = a_1 + 1/(a_2 + ...).
Slope pos_cf_eval(const std::vector<std::int64_t>& a);

}  // namespace altsurg
