#include "altsurg/intlat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include <boost/rational.hpp>

#include "altsurg/error.hpp"

namespace altsurg {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v, const char* what) {
  ensure(v <= INT64_MAX && v >= INT64_MIN, std::string("integer overflow in ") + what);
  return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void check_square(const IntMatrix& m, const char* who) {
  for (const auto& row : m) require(row.size() == m.size(), std::string(who) + ": matrix is not square");
}

}  // namespace

std::int64_t dot(const IntVector& a, const IntVector& b) {
  ensure(a.size() == b.size(), "dot: length mismatch");
  Wide s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<Wide>(a[i]) * b[i];
  return narrow(s, "dot");
}

IntVector add(const IntVector& a, const IntVector& b) {
  ensure(a.size() == b.size(), "add: length mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  ensure(a.size() == b.size(), "sub: length mismatch");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector scale(std::int64_t c, const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

IntVector neg(const IntVector& a) { return scale(-1, a); }

bool is_zero(const IntVector& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; });
}

IntMatrix gram_of(const std::vector<IntVector>& vectors) {
  IntMatrix g(vectors.size(), IntVector(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i; j < vectors.size(); ++j) g[i][j] = g[j][i] = dot(vectors[i], vectors[j]);
  return g;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  ensure(a[0].size() == b.size(), "multiply: shape mismatch");
  std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix r(a.size(), IntVector(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Wide s = 0;
      for (std::size_t k = 0; k < b.size(); ++k) s += static_cast<Wide>(a[i][k]) * b[k][j];
      r[i][j] = narrow(s, "multiply");
    }
  return r;
}

bool GramLattice::is_symmetric() const {
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (gram[i].size() != gram.size()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i]) return false;
  }
  return true;
}

std::int64_t GramLattice::pair(const IntVector& x, const IntVector& y) const {
  ensure(x.size() == gram.size() && y.size() == gram.size(), "pair: length mismatch");
  Wide s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Wide t = 0;
    for (std::size_t j = 0; j < y.size(); ++j) t += static_cast<Wide>(gram[i][j]) * y[j];
    s += t * x[i];
  }
  return narrow(s, "pair");
}

std::int64_t GramLattice::norm(const IntVector& x) const { return pair(x, x); }

GramLattice GramLattice::parse(const std::string& text) {
  std::istringstream in(text);
  long long r = 0;
  require(static_cast<bool>(in >> r) && r >= 0, "gram: expected a rank on the first line");
  IntMatrix g(r, IntVector(r));
  for (auto& row : g)
    for (auto& x : row) {
      long long v = 0;
      require(static_cast<bool>(in >> v), "gram: not enough entries");
      x = v;
    }
  std::string extra;
  require(!(in >> extra), "gram: trailing data '" + extra + "'");
  GramLattice out(std::move(g));
  require(out.is_symmetric(), "gram: matrix is not symmetric");
  return out;
}

std::string GramLattice::str() const {
  std::ostringstream out;
  out << gram.size() << "\n";
  for (const auto& row : gram) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
  return out.str();
}

// Fraction-free Gaussian elimination (Bareiss); every intermediate is a minor.
std::int64_t determinant(const IntMatrix& m) {
  check_square(m, "determinant");
  std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  int sign = 1;
  Wide prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        ensure(a[i][j] < (Wide(1) << 100) && a[i][j] > -(Wide(1) << 100), "determinant: overflow");
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return narrow(sign * a[n - 1][n - 1], "determinant");
}

bool is_positive_definite(const GramLattice& g) {
  if (!g.is_symmetric()) return false;
  for (int k = 1; k <= g.rank(); ++k) {
    IntMatrix lead(k, IntVector(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead[i][j] = g.gram[i][j];
    if (determinant(lead) <= 0) return false;
  }
  return true;
}

std::int64_t discriminant(const GramLattice& g) { return determinant(g.gram); }

// Congruence diagonalisation with integer Schur complements: eliminating a
// pivot a leaves a * S, whose signature is sign(a) times that of S.
int signature(const IntMatrix& m) {
  check_square(m, "signature");
  std::size_t n = m.size();
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      require(m[i][j] == m[j][i], "signature: matrix is not symmetric");
      a[i][j] = m[i][j];
    }
  std::vector<std::size_t> live(n);
  std::iota(live.begin(), live.end(), 0);
  int sig = 0;
  int factor = 1;  // sign relating the current block to the original form
  while (!live.empty()) {
    auto piv = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return a[i][i] != 0; });
    if (piv == live.end()) {
      // No nonzero diagonal: replace x_i by x_i + x_j for some a_ij != 0.
      bool found = false;
      for (std::size_t i : live) {
        for (std::size_t j : live)
          if (i != j && a[i][j] != 0) {
            // All diagonal entries are zero here, so the new a_ii is 2 a_ij.
            Wide aij = a[i][j];
            for (std::size_t k : live) a[i][k] += a[j][k];
            for (std::size_t k : live) a[k][i] = a[i][k];
            a[i][i] = 2 * aij;
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) break;  // zero block: remaining directions are null
      continue;
    }
    std::size_t p = *piv;
    Wide ap = a[p][p];
    sig += factor * (ap > 0 ? 1 : -1);
    live.erase(piv);
    Wide g = 0;
    for (std::size_t i : live)
      for (std::size_t j : live) {
        a[i][j] = ap * a[i][j] - a[i][p] * a[p][j];
        g = wide_gcd(g, a[i][j]);
      }
    if (ap < 0) factor = -factor;
    if (g > 1)
      for (std::size_t i : live)
        for (std::size_t j : live) a[i][j] /= g;
  }
  return sig;
}

std::vector<IntVector> hermite_rows(std::vector<IntVector> rows) {
  if (rows.empty()) return rows;
  std::size_t n = rows[0].size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < n && top < rows.size(); ++col) {
    // Euclid on the column among rows [top, end).
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][col] != 0 && (best == rows.size() || std::llabs(rows[r][col]) < std::llabs(rows[best][col])))
          best = r;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        std::int64_t qt = rows[r][col] / rows[top][col];
        for (std::size_t k = 0; k < n; ++k) rows[r][k] -= qt * rows[top][k];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0) rows[top] = neg(rows[top]);
    std::int64_t pv = rows[top][col];
    for (std::size_t r = 0; r < top; ++r) {
      std::int64_t qt = rows[r][col] / pv;
      if (rows[r][col] - qt * pv < 0) --qt;
      if (qt != 0)
        for (std::size_t k = 0; k < n; ++k) rows[r][k] -= qt * rows[top][k];
    }
    ++top;
  }
  rows.resize(top);
  return rows;
}

std::vector<IntVector> orthogonal_complement(const std::vector<IntVector>& vectors, int ambient) {
  require(ambient >= 0, "orthogonal_complement: negative dimension");
  for (const auto& v : vectors)
    require(static_cast<int>(v.size()) == ambient, "orthogonal_complement: vector length differs from ambient");
  std::size_t n = ambient;
  // Column operations on U keep A U in column echelon form; the untouched
  // trailing columns of U span the kernel.
  IntMatrix u(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;
  std::size_t pc = 0;
  auto col_value = [&](const IntVector& row, std::size_t c) {
    Wide s = 0;
    for (std::size_t k = 0; k < n; ++k) s += static_cast<Wide>(row[k]) * u[k][c];
    return narrow(s, "orthogonal_complement");
  };
  for (const auto& row : vectors) {
    if (pc == n) break;
    while (true) {
      std::vector<std::int64_t> val(n, 0);
      std::size_t best = n;
      for (std::size_t c = pc; c < n; ++c) {
        val[c] = col_value(row, c);
        if (val[c] != 0 && (best == n || std::llabs(val[c]) < std::llabs(val[best]))) best = c;
      }
      if (best == n) break;
      if (best != pc) {
        for (std::size_t k = 0; k < n; ++k) std::swap(u[k][best], u[k][pc]);
        std::swap(val[best], val[pc]);
      }
      bool done = true;
      for (std::size_t c = pc + 1; c < n; ++c) {
        if (val[c] == 0) continue;
        std::int64_t qt = val[c] / val[pc];
        for (std::size_t k = 0; k < n; ++k) u[k][c] -= qt * u[k][pc];
        if (val[c] - qt * val[pc] != 0) done = false;
      }
      if (done) {
        ++pc;
        break;
      }
    }
  }
  std::vector<IntVector> kernel;
  for (std::size_t c = pc; c < n; ++c) {
    IntVector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = u[k][c];
    kernel.push_back(v);
  }
  return hermite_rows(kernel);
}

std::optional<IntVector> integer_coordinates(const std::vector<IntVector>& basis, const IntVector& z) {
  using Q = boost::rational<std::int64_t>;
  std::size_t r = basis.size();
  if (r == 0) return is_zero(z) ? std::optional<IntVector>(IntVector{}) : std::nullopt;
  IntMatrix g = gram_of(basis);
  std::vector<std::vector<Q>> a(r, std::vector<Q>(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = g[i][j];
    a[i][r] = dot(basis[i], z);
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t piv = c;
    while (piv < r && a[piv][c].numerator() == 0) ++piv;
    require(piv < r, "integer_coordinates: basis is linearly dependent");
    std::swap(a[c], a[piv]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || a[i][c].numerator() == 0) continue;
      Q f = a[i][c] / a[c][c];
      for (std::size_t j = c; j <= r; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntVector coeffs(r);
  for (std::size_t i = 0; i < r; ++i) {
    Q x = a[i][r] / a[i][i];
    if (x.denominator() != 1) return std::nullopt;
    coeffs[i] = x.numerator();
  }
  IntVector back(z.size(), 0);
  for (std::size_t i = 0; i < r; ++i) back = add(back, scale(coeffs[i], basis[i]));
  if (back != z) return std::nullopt;
  return coeffs;
}

namespace {

// Fincke-Pohst enumeration.  Floating point is used only to prune, with a
// slack that errs towards visiting extra nodes; membership is decided by
// the exact integer norm.
class Enumerator {
 public:
  Enumerator(const GramLattice& g, std::int64_t bound, std::int64_t budget)
      : g_(g), n_(g.rank()), bound_(bound), budget_(budget), q_(n_, std::vector<long double>(n_)), x_(n_, 0) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) q_[i][j] = g.gram[i][j];
    for (int i = 0; i < n_; ++i) {
      ensure(q_[i][i] > 0, "enumeration: Gram matrix is not positive definite");
      for (int j = i + 1; j < n_; ++j) {
        q_[j][i] = q_[i][j];
        q_[i][j] /= q_[i][i];
      }
      for (int k = i + 1; k < n_; ++k)
        for (int l = k; l < n_; ++l) q_[k][l] -= q_[k][i] * q_[i][l];
    }
  }

  std::vector<IntVector> run() {
    if (n_ == 0) return {IntVector{}};
    descend(n_ - 1, static_cast<long double>(bound_));
    return std::move(out_);
  }

 private:
  void descend(int i, long double remaining) {
    long double c = 0;
    for (int j = i + 1; j < n_; ++j) c -= q_[i][j] * x_[j];
    long double radius = std::sqrt(std::max<long double>(remaining, 0) / q_[i][i]) + 1e-6L;
    auto lo = static_cast<std::int64_t>(std::ceil(c - radius));
    auto hi = static_cast<std::int64_t>(std::floor(c + radius));
    for (std::int64_t v = lo; v <= hi; ++v) {
      if (++nodes_ > budget_) throw BudgetExceeded("lattice enumeration exceeded budget of " + std::to_string(budget_) + " nodes");
      x_[i] = v;
      long double t = v - c;
      long double rest = remaining - q_[i][i] * t * t;
      if (rest < -1e-6L * (1 + std::fabs(remaining))) continue;
      if (i == 0) {
        if (g_.norm(x_) <= bound_) out_.push_back(x_);
      } else {
        descend(i - 1, rest);
      }
    }
    x_[i] = 0;
  }

  const GramLattice& g_;
  int n_;
  std::int64_t bound_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<std::vector<long double>> q_;
  IntVector x_;
  std::vector<IntVector> out_;
};

bool leading_positive(const IntVector& x) {
  for (auto v : x)
    if (v != 0) return v > 0;
  return true;
}

// Pairwise (Lagrange-style) size reduction of a Gram basis.  Tracks the
// change of basis T (reduced = T * original) and its inverse.
struct Reduced {
  IntMatrix gram, t, tinv;
};

Reduced reduce_basis(const IntMatrix& gram) {
  std::size_t n = gram.size();
  Reduced r{gram, IntMatrix(n, IntVector(n, 0)), IntMatrix(n, IntVector(n, 0))};
  for (std::size_t i = 0; i < n; ++i) r.t[i][i] = r.tinv[i][i] = 1;
  bool changed = true;
  for (int round = 0; changed && round < 1000; ++round) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        std::int64_t gij = r.gram[i][j], gjj = r.gram[j][j];
        if (2 * std::llabs(gij) <= gjj) continue;
        // c = round(gij / gjj)
        std::int64_t c = (2 * gij + (gij >= 0 ? gjj : -gjj)) / (2 * gjj);
        if (c == 0) continue;
        // b_i <- b_i - c b_j
        std::int64_t gii = r.gram[i][i];
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i) continue;
          r.gram[i][k] -= c * r.gram[j][k];
          r.gram[k][i] = r.gram[i][k];
        }
        r.gram[i][i] = gii - 2 * c * gij + c * c * gjj;
        for (std::size_t k = 0; k < n; ++k) r.t[i][k] -= c * r.t[j][k];
        for (std::size_t k = 0; k < n; ++k) r.tinv[k][j] += c * r.tinv[k][i];
        changed = true;
      }
  }
  // Shortest vectors first helps the isometry search.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return r.gram[a][a] < r.gram[b][b]; });
  Reduced s{IntMatrix(n, IntVector(n)), IntMatrix(n), IntMatrix(n, IntVector(n))};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) s.gram[a][b] = r.gram[order[a]][order[b]];
    s.t[a] = r.t[order[a]];
    for (std::size_t k = 0; k < n; ++k) s.tinv[k][a] = r.tinv[k][order[a]];
  }
  return s;
}

std::map<std::int64_t, std::int64_t> norm_spectrum(const GramLattice& g, const std::vector<IntVector>& vs) {
  std::map<std::int64_t, std::int64_t> h;
  for (const auto& v : vs) ++h[g.norm(v)];
  return h;
}

}  // namespace

std::vector<IntVector> vectors_of_norm_at_most(const GramLattice& g, std::int64_t bound, const EnumOptions& opts) {
  require(g.is_symmetric(), "enumeration: Gram matrix is not symmetric");
  require(is_positive_definite(g), "enumeration: Gram matrix is not positive definite");
  if (bound < 0) return {};
  Enumerator e(g, bound, opts.budget);
  auto all = e.run();
  std::vector<std::pair<std::int64_t, IntVector>> keyed;
  for (auto& v : all)
    if (!opts.up_to_sign || leading_positive(v)) keyed.emplace_back(g.norm(v), std::move(v));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  std::vector<IntVector> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

std::optional<Isometry> find_isometry(const GramLattice& g1, const GramLattice& g2, std::int64_t budget) {
  require(g1.is_symmetric() && g2.is_symmetric(), "isometry: Gram matrices must be symmetric");
  require(is_positive_definite(g1) && is_positive_definite(g2), "isometry: Gram matrices must be positive definite");
  if (g1.rank() != g2.rank()) return std::nullopt;
  if (discriminant(g1) != discriminant(g2)) return std::nullopt;
  int n = g1.rank();
  if (n == 0) return Isometry{};

  Reduced red = reduce_basis(g1.gram);
  GramLattice r1(red.gram);
  std::int64_t bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, red.gram[i][i]);

  EnumOptions eo;
  eo.budget = budget;
  auto pool = vectors_of_norm_at_most(g2, bound, eo);
  auto own = vectors_of_norm_at_most(r1, bound, eo);
  if (norm_spectrum(g2, pool) != norm_spectrum(r1, own)) return std::nullopt;

  std::map<std::int64_t, std::vector<std::size_t>> by_norm;
  std::vector<IntVector> pool_g(pool.size());  // G2 * v for fast pairing
  for (std::size_t k = 0; k < pool.size(); ++k) {
    by_norm[g2.norm(pool[k])].push_back(k);
    IntVector gv(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gv[i] += g2.gram[i][j] * pool[k][j];
    pool_g[k] = gv;
  }

  // Placement order: fewest candidates first, then most constrained.
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    std::pair<int, std::size_t> best_key{-1, 0};
    for (int i = 0; i < n; ++i) {
      if (placed[i]) continue;
      int links = 0;
      for (int j : order) links += red.gram[i][j] != 0;
      std::size_t cands = by_norm[red.gram[i][i]].size();
      std::pair<int, std::size_t> key{links, SIZE_MAX - cands};
      if (best < 0 || key > best_key) {
        best = i;
        best_key = key;
      }
    }
    order.push_back(best);
    placed[best] = true;
  }

  std::vector<std::size_t> image(n, 0);
  std::int64_t nodes = 0;
  std::function<bool(int)> search = [&](int depth) -> bool {
    if (depth == n) return true;
    int i = order[depth];
    for (std::size_t k : by_norm[red.gram[i][i]]) {
      if (++nodes > budget) throw BudgetExceeded("isometry search exceeded budget of " + std::to_string(budget) + " nodes");
      if (depth == 0 && !leading_positive(pool[k])) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        int j = order[d];
        ok = dot(pool_g[image[j]], pool[k]) == red.gram[i][j];
      }
      if (!ok) continue;
      image[i] = k;
      if (search(depth + 1)) return true;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;

  IntMatrix reduced_images(n);
  for (int i = 0; i < n; ++i) reduced_images[i] = pool[image[i]];
  Isometry iso{multiply(red.tinv, reduced_images)};
  // Self-check: the map must preserve the Gram matrix.
  IntMatrix check = multiply(multiply(iso.matrix, g2.gram), transpose(iso.matrix));
  ensure(check == g1.gram, "isometry: composed map does not preserve the form");
  return iso;
}

namespace {

std::vector<int> parity(const IntVector& x) {
  std::vector<int> p(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) p[i] = static_cast<int>(((x[i] % 2) + 2) % 2);
  return p;
}

}  // namespace

bool is_irreducible(const GramLattice& g, const IntVector& x, std::int64_t budget) {
  require(static_cast<int>(x.size()) == g.rank(), "is_irreducible: vector length differs from rank");
  if (is_zero(x)) return false;
  EnumOptions eo;
  eo.budget = budget;
  auto px = parity(x);
  for (const auto& y : vectors_of_norm_at_most(g, g.norm(x), eo))
    if (parity(y) == px && y != x && y != neg(x)) return false;
  return true;
}

std::vector<IntVector> irreducible_vectors(const GramLattice& g, std::int64_t budget) {
  int n = g.rank();
  require(n <= 20, "irreducible_vectors: rank too large");
  if (n == 0) return {};
  std::int64_t bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, g.gram[i][i]);
  EnumOptions eo;
  eo.budget = budget;
  std::size_t cosets = (std::size_t(1) << n) - 1;
  while (true) {
    auto vs = vectors_of_norm_at_most(g, bound, eo);
    std::map<std::vector<int>, std::vector<const IntVector*>> minima;
    std::map<std::vector<int>, std::int64_t> min_norm;
    for (const auto& v : vs) {
      auto p = parity(v);
      if (std::all_of(p.begin(), p.end(), [](int b) { return b == 0; })) continue;
      auto nv = g.norm(v);
      auto it = min_norm.find(p);
      if (it == min_norm.end() || nv < it->second) {
        min_norm[p] = nv;
        minima[p] = {&v};
      } else if (nv == it->second) {
        minima[p].push_back(&v);
      }
    }
    if (min_norm.size() == cosets) {
      std::vector<IntVector> out;
      for (auto& [p, list] : minima)
        if (list.size() == 2)
          for (auto* v : list) out.push_back(*v);
      std::sort(out.begin(), out.end());
      return out;
    }
    require(bound < (INT64_MAX / 4), "irreducible_vectors: norm bound overflow");
    bound *= 2;
  }
}

bool is_decomposable(const GramLattice& g, std::int64_t budget) {
  auto irr = irreducible_vectors(g, budget);
  if (irr.empty()) return false;
  std::vector<int> comp(irr.size(), -1);
  comp[0] = 0;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    auto a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < irr.size(); ++b)
      if (comp[b] < 0 && g.pair(irr[a], irr[b]) != 0) {
        comp[b] = 0;
        stack.push_back(b);
      }
  }
  return std::any_of(comp.begin(), comp.end(), [](int c) { return c < 0; });
}

}  // namespace altsurg
