#include "altsurg/cmlat.hpp"

#include <algorithm>

#include "altsurg/error.hpp"

namespace altsurg {

IntVector ChangemakerLattice::embed(const IntVector& coords) const {
  require(coords.size() == basis.size(), "embed: coordinate count differs from rank");
  IntVector x(N, 0);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) x = add(x, scale(coords[i], basis[i]));
  return x;
}

bool ChangemakerLattice::contains(const IntVector& x) const {
  if (static_cast<int>(x.size()) != N) return false;
  return std::all_of(w.begin(), w.end(), [&](const IntVector& wi) { return dot(wi, x) == 0; });
}

bool changemaker_check(Coeffs sigma) {
  if (sigma.empty()) return false;
  std::sort(sigma.begin(), sigma.end());
  std::int64_t total = 0;
  for (auto x : sigma) {
    if (x < 1 || x > total + 1) return false;
    total += x;
  }
  return true;
}

Coeffs coeffs_from_stable(const Slope& slope, Coeffs stable) {
  require(slope.q >= 1 && slope.p >= slope.q, "changemaker slope must be at least 1");
  for (auto x : stable) require(x >= 2, "stable coefficients must be at least 2");
  std::sort(stable.begin(), stable.end());
  // ||w_0|| is p for integer slopes and a_0 = 1 + sum sigma^2 otherwise.
  std::int64_t target = slope.is_integer() ? slope.p : slope.ceil() - 1;
  std::int64_t sq = 0;
  for (auto x : stable) sq += x * x;
  std::int64_t ones = target - sq;
  require(ones >= 0, "slope " + slope.str() + " incompatible with stable coefficients (too large)");
  Coeffs sigma(ones, 1);
  sigma.insert(sigma.end(), stable.begin(), stable.end());
  require(changemaker_check(sigma), "slope " + slope.str() + " incompatible with stable coefficients (changemaker condition fails)");
  return sigma;
}

Tightness tightness(const Coeffs& sigma) {
  Tightness out;
  std::int64_t total = 0;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    if (k > 0 && sigma[k] == 1 + total) out.tight_indices.push_back(static_cast<int>(k) + 1);
    total += sigma[k];
  }
  out.tight = !out.tight_indices.empty();
  return out;
}

std::optional<std::vector<int>> greedy_subset(const Coeffs& sigma, std::int64_t target, int max_index) {
  std::vector<int> chosen;
  for (int i = max_index; i >= 1 && target > 0; --i)
    if (sigma[i - 1] <= target) {
      chosen.push_back(i);
      target -= sigma[i - 1];
    }
  if (target != 0) return std::nullopt;
  std::reverse(chosen.begin(), chosen.end());
  return chosen;
}

std::int64_t genus_from_stable(const Coeffs& stable) {
  std::int64_t twice = 0;
  for (auto x : stable) twice += x * (x - 1);
  return twice / 2;
}

ChangemakerLattice cm_build(const Slope& slope, const Coeffs& stable) {
  return cm_build_sigma(slope, coeffs_from_stable(slope, stable));
}

ChangemakerLattice cm_build_sigma(const Slope& slope, Coeffs sigma) {
  require(slope.q >= 1 && slope.p >= slope.q, "changemaker slope must be at least 1");
  std::sort(sigma.begin(), sigma.end());
  require(changemaker_check(sigma), "coefficients fail the changemaker condition");
  ChangemakerLattice lat;
  lat.slope = slope;
  lat.cf = neg_cf_expand(slope);
  lat.sigma = sigma;
  for (auto x : sigma)
    if (x >= 2) lat.stable.push_back(x);
  lat.t = static_cast<int>(sigma.size());
  const auto& a = lat.cf.a;
  std::int64_t sq = 0;
  for (auto x : sigma) sq += x * x;

  if (slope.is_integer()) {
    require(sq == slope.p, "sum of squared coefficients must equal the integer slope");
    lat.s = -1;
    lat.N = lat.t;
    IntVector w0(lat.N, 0);
    for (int i = 1; i <= lat.t; ++i) w0[lat.f(i)] = sigma[i - 1];
    lat.w.push_back(w0);
  } else {
    require(sq + 1 == a[0], "sum of squared coefficients must equal ceil(p/q) - 1");
    FractionalPart fp = fractional_part(slope);
    lat.s = fp.s;
    lat.N = lat.s + lat.t + 1;
    auto widen = [&](const IntVector& v) {
      IntVector x(lat.N, 0);
      std::copy(v.begin(), v.end(), x.begin());
      return x;
    };
    IntVector w0(lat.N, 0);
    w0[lat.e(0)] = 1;
    for (int i = 1; i <= lat.t; ++i) w0[lat.f(i)] = sigma[i - 1];
    lat.w.push_back(w0);
    for (const auto& wk : fp.w_tail) lat.w.push_back(widen(wk));
    for (const auto& mi : fp.mu) lat.mu.push_back(widen(mi));
  }

  // nu_k: tight ones close up with f_1..f_{k-1} (plus mu_0, or 2 f_1 for
  // integer slopes); the rest use a greedy subset A_k of {1..k-2}.
  std::int64_t partial = 0;
  for (int k = 1; k <= lat.t; ++k) {
    bool tight = (k == 1) || sigma[k - 1] == 1 + partial;
    IntVector v(lat.N, 0);
    v[lat.f(k)] = -1;
    if (k == 1 && lat.integral()) {
      partial += sigma[k - 1];
      continue;
    }
    if (tight) {
      for (int i = 1; i < k; ++i) v[lat.f(i)] = 1;
      if (lat.integral())
        v[lat.f(1)] = 2;
      else
        v = add(v, lat.mu[0]);
    } else {
      v[lat.f(k - 1)] = 1;
      auto subset = greedy_subset(sigma, sigma[k - 1] - sigma[k - 2], k - 2);
      ensure(subset.has_value(), "no subset realizes a non-tight changemaker coefficient");
      for (int i : *subset) v[lat.f(i)] += 1;
    }
    lat.nu.push_back(v);
    partial += sigma[k - 1];
  }

  lat.basis = lat.nu;
  for (std::size_t i = 1; i < lat.mu.size(); ++i) lat.basis.push_back(lat.mu[i]);
  lat.gram = GramLattice(gram_of(lat.basis));

  for (std::size_t i = 0; i < lat.w.size(); ++i)
    for (std::size_t j = 0; j < lat.w.size(); ++j) {
      std::int64_t want = i == j ? a[i] : (i + 1 == j || j + 1 == i ? -1 : 0);
      if (lat.integral()) want = slope.p;
      ensure(dot(lat.w[i], lat.w[j]) == want, "w-vectors do not realize the continued fraction");
    }
  for (const auto& b : lat.basis) ensure(lat.contains(b), "standard basis vector not orthogonal to w");
  ensure(lat.rank() == lat.N - static_cast<int>(lat.w.size()), "standard basis has the wrong size");
  if (lat.rank() <= 40)
    ensure(determinant(lat.gram.gram) == slope.p, "changemaker lattice discriminant differs from p");
  return lat;
}

FractionalPart fractional_part(const Slope& slope) {
  require(!slope.is_integer() && slope.p > slope.q, "fractional part needs a non-integer slope above 1");
  auto a = neg_cf_expand(slope).a;
  int l = static_cast<int>(a.size()) - 1;
  FractionalPart fp;
  fp.alpha.push_back(0);
  for (int k = 1; k <= l; ++k) fp.alpha.push_back(fp.alpha.back() + static_cast<int>(a[k] - 1));
  fp.s = fp.alpha.back();
  int len = fp.s + 1;
  for (int k = 1; k <= l; ++k) {
    IntVector wk(len, 0);
    wk[fp.alpha[k - 1]] = -1;
    for (int j = fp.alpha[k - 1] + 1; j <= fp.alpha[k]; ++j) wk[j] = 1;
    fp.w_tail.push_back(wk);
  }
  // beta_1 < ... < beta_m enumerate {0..s} minus the alphas; beta_{m+1} = s.
  std::vector<int> beta;
  std::vector<bool> is_alpha(len, false);
  for (int x : fp.alpha) is_alpha[x] = true;
  for (int j = 0; j < len; ++j)
    if (!is_alpha[j]) beta.push_back(j);
  int m = static_cast<int>(beta.size());
  beta.push_back(fp.s);
  IntVector mu0(len, 0);
  for (int j = 0; j <= beta[0]; ++j) mu0[j] = 1;
  fp.mu.push_back(mu0);
  for (int i = 1; i <= m; ++i) {
    IntVector mi(len, 0);
    mi[beta[i - 1]] = -1;
    for (int j = beta[i - 1] + 1; j <= beta[i]; ++j) mi[j] = 1;
    fp.mu.push_back(mi);
  }
  return fp;
}

std::vector<std::int64_t> FractionalPart::mu_norms() const {
  std::vector<std::int64_t> out;
  for (const auto& v : mu) out.push_back(dot(v, v));
  return out;
}

GramLattice fractional_gram(const ChangemakerLattice& lat) {
  require(!lat.integral(), "fractional part is defined only for non-integer slopes");
  return GramLattice(gram_of(lat.mu));
}

}  // namespace altsurg
