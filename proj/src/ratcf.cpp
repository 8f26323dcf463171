#include "altsurg/ratcf.hpp"

#include <numeric>
#include <sstream>

#include "altsurg/error.hpp"

namespace altsurg {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned)
    if (ch == ',' || ch == '[' || ch == ']' || ch == '(' || ch == ')') ch = ' ';
  std::istringstream in(cleaned);
  std::vector<std::int64_t> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    std::int64_t x = 0;
    try {
      x = std::stoll(token, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    require(used == token.size() && used > 0, "malformed integer '" + token + "' in list '" + text + "'");
    out.push_back(x);
  }
  return out;
}

Slope::Slope(std::int64_t num, std::int64_t den) {
  require(den != 0, "slope denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  p = num / g;
  q = den / g;
}

Slope Slope::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      require(used == text.size(), "trailing characters in slope '" + text + "'");
      return Slope(n, 1);
    }
    std::string a = text.substr(0, slash), b = text.substr(slash + 1);
    std::int64_t n = std::stoll(a, &used);
    require(used == a.size(), "malformed slope numerator in '" + text + "'");
    std::int64_t d = std::stoll(b, &used);
    require(used == b.size(), "malformed slope denominator in '" + text + "'");
    return Slope(n, d);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InputError*>(&e)) throw;
    throw InputError("malformed slope '" + text + "'");
  }
}

std::int64_t Slope::ceil() const {
  // q > 0 always; C++ division truncates toward zero.
  return p >= 0 ? (p + q - 1) / q : -((-p) / q);
}

std::string Slope::str() const {
  return std::to_string(p) + "/" + std::to_string(q);
}

std::string NegCF::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < a.size(); ++i) out << (i ? "," : "") << a[i];
  out << ']';
  return out.str();
}

NegCF neg_cf_expand(const Slope& s) {
  require(s.p > 0, "negative continued fractions need a positive slope, got " + s.str());
  require(s.p >= s.q,
          "slope " + s.str() +
              " lies in (0,1); normalize it first (for p < q replace q by q mod p)");
  NegCF cf;
  std::int64_t p = s.p, q = s.q;
  while (q != 0) {
    std::int64_t n = p / q + (p % q != 0 ? 1 : 0);
    cf.a.push_back(n);
    std::int64_t r = n * q - p;
    p = q;
    q = r;
  }
  return cf;
}

Slope neg_cf_eval(const std::vector<std::int64_t>& a) {
  require(!a.empty(), "empty continued fraction");
  Rational x(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    require(x.numerator() != 0, "zero denominator while evaluating a negative continued fraction");
    x = Rational(a[i]) - Rational(1) / x;
  }
  return Slope(x.numerator(), x.denominator());
}

Slope pos_cf_eval(const std::vector<std::int64_t>& a) {
  require(!a.empty(), "empty continued fraction");
  Rational x(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    require(x.numerator() != 0, "zero denominator while evaluating a continued fraction");
    x = Rational(a[i]) + Rational(1) / x;
  }
  return Slope(x.numerator(), x.denominator());
}

}  // namespace altsurg
