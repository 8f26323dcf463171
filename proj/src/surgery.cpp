#include "altsurg/surgery.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "altsurg/error.hpp"

namespace altsurg {

// ---------------------------------------------------------------------------
// Alexander polynomials and torsion coefficients

AlexPoly AlexPoly::from(std::vector<std::int64_t> coeffs) {
  require(!coeffs.empty(), "Alexander polynomial needs at least a_0");
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  std::int64_t at_one = coeffs[0];
  for (std::size_t i = 1; i < coeffs.size(); ++i) at_one += 2 * coeffs[i];
  require(at_one == 1, "Alexander polynomial must satisfy Delta(1) = 1 (got " + std::to_string(at_one) + ")");
  AlexPoly p;
  p.a = std::move(coeffs);
  return p;
}

AlexPoly AlexPoly::parse(const std::string& text) {
  return from(parse_int_list(text));
}

bool AlexPoly::lspace_shaped() const {
  if (a.size() == 1) return true;
  if (a.back() != 1) return false;
  // Walk down from the top degree through the full Laurent polynomial;
  // a_0 is visited once and the mirror half repeats the pattern.
  std::int64_t last = 0;
  for (int i = degree(); i >= 0; --i) {
    std::int64_t x = a[i];
    if (x == 0) continue;
    if (x != 1 && x != -1) return false;
    if (last != 0 && x == last) return false;
    last = x;
  }
  return true;
}

std::string AlexPoly::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.size(); ++i) out << (i ? " " : "") << a[i];
  return out.str();
}

std::vector<std::int64_t> torsion_coeffs(const AlexPoly& p) {
  int g = p.degree();
  std::vector<std::int64_t> t(g + 1, 0);
  for (int i = 0; i <= g; ++i)
    for (int j = 1; i + j <= g; ++j) t[i] += j * p.a[i + j];
  return t;
}

AlexPoly alexander_from_torsion(const std::vector<std::int64_t>& t) {
  auto at = [&](std::size_t i) { return i < t.size() ? t[i] : 0; };
  std::size_t len = t.size();
  while (len > 0 && t[len - 1] == 0) --len;
  std::vector<std::int64_t> a(len + 1, 0);
  std::int64_t tail = 0;
  for (std::size_t j = 1; j <= len; ++j) {
    a[j] = at(j - 1) - 2 * at(j) + at(j + 1);
    tail += a[j];
  }
  a[0] = 1 - 2 * tail;
  AlexPoly p = AlexPoly::from(a);
  // The torsion coefficients of a finitely supported sequence always
  // invert; this only guards arithmetic slips.
  auto back = torsion_coeffs(p);
  for (std::size_t i = 0; i < std::max(back.size(), t.size()); ++i)
    ensure((i < back.size() ? back[i] : 0) == at(i), "alexander_from_torsion: round trip failed");
  return p;
}

// ---------------------------------------------------------------------------
// V-sequences

VSeq VSeq::parse(const std::string& text) {
  VSeq out{parse_int_list(text)};
  require(out.valid(), "not a valid V-sequence: " + text);
  return out;
}

std::int64_t VSeq::at(std::int64_t k) const {
  if (k < 0) return at(-k) - k;
  return k < static_cast<std::int64_t>(v.size()) ? v[k] : 0;
}

bool VSeq::valid() const {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 0) return false;
    if (k > 0 && (v[k] > v[k - 1] || v[k] < v[k - 1] - 1)) return false;
  }
  // The implicit zeros after the prefix must also continue the pattern.
  return v.empty() || v.back() <= 1;
}

std::int64_t VSeq::nu_plus() const {
  std::int64_t k = 0;
  while (at(k) != 0) ++k;
  return k;
}

std::string VSeq::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

bool operator==(const VSeq& x, const VSeq& y) {
  std::size_t n = std::max(x.v.size(), y.v.size());
  for (std::size_t k = 0; k < n; ++k)
    if (x.at(k) != y.at(k)) return false;
  return true;
}

int minimal_ones(Coeffs stable) {
  for (auto x : stable) require(x >= 2, "stable coefficients must be at least 2");
  std::int64_t total = std::accumulate(stable.begin(), stable.end(), std::int64_t{0});
  for (int ones = 1; ones <= total + 1; ++ones) {
    Coeffs sigma(ones, 1);
    sigma.insert(sigma.end(), stable.begin(), stable.end());
    if (changemaker_check(sigma)) return ones;
  }
  ensure(false, "minimal_ones: no changemaker padding found");
  return -1;
}

StableStats v_from_stable(Coeffs stable, int ones, std::int64_t budget) {
  std::sort(stable.begin(), stable.end());
  if (ones < 0) ones = stable.empty() ? 1 : minimal_ones(stable);
  Coeffs sigma(ones, 1);
  sigma.insert(sigma.end(), stable.begin(), stable.end());
  std::int64_t g = genus_from_stable(stable);

  StableStats out;
  out.genus = g;
  if (g == 0) {
    out.V.v = {0};
    out.T = {0};
    return out;
  }

  // Every V_k with 0 <= k <= g is at most V_0 <= g, so terms costing more
  // than g never matter; this bounds each |alpha_i| and the partial sums.
  std::int64_t amax = 0;
  while ((amax + 1) * amax / 2 <= g) ++amax;  // largest |alpha| with cost <= g, plus one
  std::int64_t span = amax * std::accumulate(sigma.begin(), sigma.end(), std::int64_t{0});
  const std::int64_t inf = g + 1;
  std::vector<std::int64_t> cost(2 * span + 1, inf), next;
  cost[span] = 0;
  std::int64_t work = 0;
  for (auto s : sigma) {
    next.assign(cost.size(), inf);
    for (std::int64_t x = -span; x <= span; ++x) {
      std::int64_t base = cost[x + span];
      if (base >= inf) continue;
      for (std::int64_t a = -amax; a <= amax; ++a) {
        std::int64_t c = base + a * (a + 1) / 2;
        std::int64_t y = x + a * s;
        if (c >= inf || y < -span || y > span) continue;
        if (c < next[y + span]) next[y + span] = c;
      }
      work += 2 * amax + 1;
      if (work > budget) throw BudgetExceeded("v_from_stable: dynamic program exceeded the budget");
    }
    cost.swap(next);
  }

  out.V.v.resize(g + 1);
  for (std::int64_t k = 0; k <= g; ++k) {
    std::int64_t c = cost[g - k + span];
    ensure(c < inf, "v_from_stable: target " + std::to_string(g - k) + " unreachable within genus bound");
    out.V.v[k] = c;
  }
  ensure(out.V.valid() && out.V.v[g] == 0 && out.V.v[g - 1] >= 1, "v_from_stable: produced an invalid V-sequence");
  std::int64_t v0 = out.V.v[0];
  out.T.assign(v0 + 1, 0);
  for (std::int64_t m = 0; m <= v0; ++m)
    for (auto x : out.V.v)
      if (x >= 1 && x <= m) ++out.T[m];
  return out;
}

namespace {

// max rho . alpha over alpha >= 0 with sum alpha_i(alpha_i+1)/2 <= m; the
// remaining weight is absorbed by coordinates carrying coefficient 0.
std::int64_t best_pairing(const Coeffs& rho, std::int64_t m) {
  std::vector<std::int64_t> dp(m + 1, 0), next;
  for (auto r : rho) {
    next = dp;
    for (std::int64_t w = 0; w <= m; ++w)
      for (std::int64_t a = 1; a * (a + 1) / 2 <= w; ++a)
        next[w] = std::max(next[w], dp[w - a * (a + 1) / 2] + r * a);
    dp.swap(next);
  }
  return dp[m];
}

Coeffs threes_and_twos(std::int64_t g) {
  Coeffs rho(g / 3, 3);
  for (std::int64_t i = 0; i < g % 3; ++i) rho.push_back(2);
  return rho;
}

}  // namespace

Coeffs recover_stable(const VSeq& V, std::int64_t budget) {
  require(V.valid(), "not a valid V-sequence: " + V.str());
  const std::string failure = "not a changemaker V-sequence: " + V.str();
  std::int64_t g = V.nu_plus();
  std::int64_t v0 = V.at(0);
  std::vector<std::int64_t> T(v0 + 1, 0);
  for (std::int64_t m = 0; m <= v0; ++m)
    for (std::int64_t k = 0; k < g; ++k)
      if (V.at(k) <= m) ++T[m];

  Coeffs rho;
  if (v0 <= 1) {
    // Only g <= 3 is possible: (), (2), (2,2), (3).
    require(g <= 3, failure);
    static const Coeffs table[] = {{}, {2}, {2, 2}, {3}};
    rho = table[g];
  } else {
    std::int64_t mu = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t i = 1; i < v0; ++i) mu = std::min(mu, T[i] - T[i - 1]);
    if (mu > 2) {
      require(mu == 3 && T[1] == 3, failure);
      rho = threes_and_twos(g);
    } else {
      // rho is built in decreasing order: each new coefficient is the jump
      // T_t - T_{t-1} at the first t where the known part falls short.
      for (;;) {
        std::int64_t found = 0;
        for (std::int64_t t = 1; t < v0; ++t)
          if (best_pairing(rho, t) < T[t]) {
            found = T[t] - T[t - 1];
            break;
          }
        if (found < 2) break;
        require(rho.empty() || found <= rho.back(), failure);
        rho.push_back(found);
        require(genus_from_stable(rho) <= g, failure);
      }
      // The remaining stable coefficients are all 2, each adding one to g.
      std::int64_t deficit = g - genus_from_stable(rho);
      require(deficit >= 0, failure);
      rho.insert(rho.end(), deficit, 2);
    }
  }
  std::sort(rho.begin(), rho.end());
  require(v_from_stable(rho, -1, budget).V == V, failure);
  return rho;
}

// ---------------------------------------------------------------------------
// Spin^c representatives and d-invariants

namespace {

void require_characteristic(const IntVector& c, const NegCF& cf) {
  require(c.size() == cf.a.size(), "spin^c representative has the wrong length");
  for (std::size_t i = 0; i < c.size(); ++i)
    require(((c[i] - cf.a[i]) % 2) == 0, "spin^c representative is not characteristic");
}

// Tridiagonal solve M x = c for M = tridiag(-1, a, -1), exact.
std::vector<Rational> plumbing_solve(const NegCF& cf, const std::vector<Rational>& c) {
  std::size_t n = cf.a.size();
  std::vector<Rational> d(n), y(n), x(n);
  d[0] = Rational(cf.a[0]);
  y[0] = c[0];
  for (std::size_t i = 1; i < n; ++i) {
    d[i] = Rational(cf.a[i]) - Rational(1) / d[i - 1];
    y[i] = c[i] + y[i - 1] / d[i - 1];
  }
  x[n - 1] = y[n - 1] / d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = (y[i] + x[i + 1]) / d[i];
  return x;
}

Rational plumbing_norm(const NegCF& cf, const IntVector& c) {
  std::vector<Rational> rc(c.begin(), c.end());
  auto x = plumbing_solve(cf, rc);
  Rational total = 0;
  for (std::size_t i = 0; i < c.size(); ++i) total += rc[i] * x[i];
  return total;
}

// u_k = p (M^-1)_{0k}; integers because det M = p.
std::vector<std::int64_t> label_weights(const NegCF& cf, std::int64_t p) {
  std::vector<Rational> e0(cf.a.size(), Rational(0));
  e0[0] = 1;
  auto x = plumbing_solve(cf, e0);
  std::vector<std::int64_t> u;
  for (auto& xi : x) {
    Rational v = xi * p;
    ensure(v.denominator() == 1, "label weights are not integral");
    u.push_back(v.numerator());
  }
  return u;
}

std::int64_t label_with(const IntVector& c, const NegCF& cf, const std::vector<std::int64_t>& u, std::int64_t p) {
  // Reference characteristic vector (-a_0, 2-a_1, ..., 2-a_l) has label 0.
  std::int64_t total = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    std::int64_t ref = k == 0 ? -cf.a[0] : 2 - cf.a[k];
    std::int64_t half = (c[k] - ref) / 2;
    total = ((total + static_cast<__int128>(half % p) * (u[k] % p)) % p + p) % p;
  }
  return total;
}

}  // namespace

bool has_full_tank(const IntVector& c, const NegCF& cf) {
  bool open = false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == cf.a[i]) {
      if (open) return true;
      open = true;
    } else if (c[i] != cf.a[i] - 2) {
      open = false;
    }
  }
  return false;
}

bool is_left_full(const IntVector& c, const NegCF& cf) {
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (c[k] == cf.a[k]) return true;
    if (c[k] != cf.a[k] - 2) return false;
  }
  return false;
}

bool in_M(const IntVector& c, const NegCF& cf) {
  require_characteristic(c, cf);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] < -cf.a[i] || c[i] > cf.a[i]) return false;
  return !has_full_tank(c, cf) && !has_full_tank(neg(c), cf);
}

bool in_C(const IntVector& c, const NegCF& cf) {
  if (!in_M(c, cf)) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] < 2 - cf.a[i]) return false;
  return true;
}

std::int64_t spinc_label(const IntVector& c, const NegCF& cf) {
  require_characteristic(c, cf);
  std::int64_t p = neg_cf_eval(cf).p;
  return label_with(c, cf, label_weights(cf, p), p);
}

std::vector<SpincClass> lens_d_invariants(const Slope& slope) {
  require(slope.p >= slope.q && slope.q >= 1, "lens d-invariants need a slope p/q >= 1");
  NegCF cf = neg_cf_expand(slope);
  std::int64_t p = slope.p;
  int l = static_cast<int>(cf.a.size()) - 1;
  auto u = label_weights(cf, p);

  // Depth-first over 2-a_i <= c_i <= a_i, pruning full tanks as they close.
  // Inside this box -c never contains a full tank.
  std::vector<SpincClass> out;
  IntVector c(cf.a.size());
  auto rec = [&](auto&& self, int i, bool open) -> void {
    if (i > l) {
      Rational norm = plumbing_norm(cf, c);
      out.push_back({c, label_with(c, cf, u, p), norm, (norm - (l + 1)) / 4});
      return;
    }
    for (std::int64_t x = 2 - cf.a[i]; x <= cf.a[i]; x += 2) {
      if (x == cf.a[i] && open) continue;
      c[i] = x;
      self(self, i + 1, x == cf.a[i] || (open && x == cf.a[i] - 2));
    }
  };
  rec(rec, 0, false);

  ensure(static_cast<std::int64_t>(out.size()) == p, "lens_d_invariants: |C| differs from p");
  std::sort(out.begin(), out.end(), [](const SpincClass& x, const SpincClass& y) { return x.label < y.label; });
  for (std::int64_t i = 0; i < p; ++i) ensure(out[i].label == i, "lens_d_invariants: labels are not a bijection");
  return out;
}

std::vector<Rational> lens_d_by_label(const Slope& slope) {
  std::vector<Rational> d;
  for (auto& cls : lens_d_invariants(slope)) d.push_back(cls.d);
  return d;
}

std::int64_t correction_index(const Slope& slope, std::int64_t i) {
  require(i >= 0 && i < slope.p, "spin^c label out of range");
  std::int64_t down = i / slope.q;
  std::int64_t up = (slope.p - i + slope.q - 1) / slope.q;
  return std::min(down, up);
}

std::vector<Rational> surgery_d_invariants(const Slope& slope, const VSeq& V) {
  auto d = lens_d_by_label(slope);
  for (std::int64_t i = 0; i < slope.p; ++i) d[i] -= 2 * V.at(correction_index(slope, i));
  return d;
}

std::int64_t eval_correction(const IntVector& c, const NegCF& cf, const VSeq& V) {
  require(in_M(c, cf), "eval_correction: representative is not in M");
  std::int64_t a0 = cf.a[0], c0 = c[0];
  bool shifted = (is_left_full(c, cf) && c0 >= 0) || (is_left_full(neg(c), cf) && -c0 >= 0);
  std::int64_t index = (a0 - std::abs(c0) - (shifted ? 2 : 0)) / 2;
  return 2 * V.at(index);
}

// ---------------------------------------------------------------------------
// Slope bounds and torus knots

SlopeWindow slope_window(Coeffs stable) {
  require(!stable.empty(), "slope window is undefined for the unknot (no stable coefficients)");
  std::sort(stable.begin(), stable.end());
  SlopeWindow w;
  w.N = stable.front();
  for (auto x : stable) w.N += x * x;
  w.lo = w.N - 1;
  w.hi = w.N + 1;
  return w;
}

bool rasmussen_bound_ok(const Rational& slope, std::int64_t genus) {
  return boost::abs(slope) <= Rational(4 * genus + 3);
}

bool GreeneBound::excludes(const Rational& x) const {
  if (genus <= 0) return false;
  // |x| < 2g + (1 + sqrt(D))/2  <=>  y := 2|x| - 4g - 1 < sqrt(D).
  Rational y = 2 * boost::abs(x) - Rational(4 * genus + 1);
  if (y < 0) return true;
  return y * y < Rational(24 * genus + 1);
}

std::string GreeneBound::str() const {
  std::int64_t disc = 24 * genus + 1;
  std::int64_t root = 0;
  while ((root + 1) * (root + 1) <= disc) ++root;
  if (root * root == disc) return to_string(Rational(2 * genus) + Rational(1 + root, 2));
  return std::to_string(2 * genus) + " + (1 + sqrt(" + std::to_string(disc) + "))/2";
}

GreeneBound greene_lower_bound(std::int64_t genus) {
  require(genus >= 0, "genus must be nonnegative");
  return GreeneBound{genus};
}

namespace {

using Poly = std::vector<std::int64_t>;  // coefficient of t^i at index i

Poly poly_mul(const Poly& x, const Poly& y) {
  Poly z(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) z[i + j] += x[i] * y[j];
  return z;
}

// Exact division by a monic polynomial; the remainder must vanish.
Poly poly_div_exact(Poly x, const Poly& y) {
  ensure(y.back() == 1, "poly_div_exact: divisor must be monic");
  std::size_t dy = y.size() - 1;
  Poly quot(x.size() - dy, 0);
  for (std::size_t i = x.size(); i-- > dy;) {
    std::int64_t c = x[i];
    quot[i - dy] = c;
    for (std::size_t j = 0; j <= dy; ++j) x[i - dy + j] -= c * y[j];
  }
  for (auto r : x) ensure(r == 0, "poly_div_exact: nonzero remainder");
  return quot;
}

Poly t_power_minus_one(std::int64_t n) {
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  return p;
}

}  // namespace

TorusData torus_tools(std::int64_t r, std::int64_t s) {
  if (r < s) std::swap(r, s);
  require(s >= 2, "torus knot parameters must both be at least 2");
  require(std::gcd(r, s) == 1, "torus knot parameters must be coprime");
  TorusData out;
  out.r = r;
  out.s = s;
  Poly num = poly_mul(t_power_minus_one(r * s), t_power_minus_one(1));
  Poly delta = poly_div_exact(poly_div_exact(num, t_power_minus_one(r)), t_power_minus_one(s));
  out.genus = (r - 1) * (s - 1) / 2;
  ensure(static_cast<std::int64_t>(delta.size()) == 2 * out.genus + 1, "torus_tools: unexpected degree");
  out.alexander = AlexPoly::from(Poly(delta.begin() + out.genus, delta.end()));
  out.unknotting = out.genus;
  out.char_slope_threshold = Rational(43 * (r * s - r - s), 4);
  return out;
}

}  // namespace altsurg
