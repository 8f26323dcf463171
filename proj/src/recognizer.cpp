#include "altsurg/recognizer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "altsurg/error.hpp"

namespace altsurg {

// ---------------------------------------------------------------------------
// Candidates

namespace {

// Nondecreasing tuples with sigma_1 = 1 and sigma_i <= 1 + sigma_1 + ... +
// sigma_{i-1} whose squares sum to `remaining`; length_left < 0 means any length.
void enumerate_sigma(std::int64_t remaining, std::int64_t prefix, int length_left, Coeffs& cur,
                     std::vector<Coeffs>& out) {
  if (remaining == 0) {
    if (!cur.empty() && length_left <= 0) out.push_back(cur);
    return;
  }
  if (length_left == 0) return;
  std::int64_t lo = cur.empty() ? 1 : cur.back();
  std::int64_t hi = prefix + 1;
  for (std::int64_t x = lo; x <= hi && x * x <= remaining; ++x) {
    if (length_left > 0 && x * x * length_left > remaining) break;
    cur.push_back(x);
    enumerate_sigma(remaining - x * x, prefix + x, length_left < 0 ? -1 : length_left - 1, cur, out);
    cur.pop_back();
  }
}

Coeffs stable_part(const Coeffs& sigma) {
  Coeffs out;
  for (auto x : sigma)
    if (x >= 2) out.push_back(x);
  return out;
}

}  // namespace

std::vector<ChangemakerLattice> candidate_cm_lattices(const Slope& slope, int rank) {
  require(slope.q >= 1 && slope.p > slope.q, "candidate lattices need a slope p/q > 1");
  std::int64_t target = slope.is_integer() ? slope.p : slope.ceil() - 1;
  int length = -1;
  if (rank >= 0) {
    int m = slope.is_integer() ? 0 : static_cast<int>(fractional_part(slope).mu.size()) - 1;
    length = rank - m;
    if (length < 1) return {};
  }
  std::vector<Coeffs> tuples;
  Coeffs cur;
  enumerate_sigma(target, 0, length, cur, tuples);
  std::sort(tuples.begin(), tuples.end(),
            [](const Coeffs& a, const Coeffs& b) { return stable_part(a) < stable_part(b); });
  std::vector<ChangemakerLattice> out;
  for (const auto& sigma : tuples)
    if (changemaker_check(sigma)) out.push_back(cm_build_sigma(slope, sigma));
  return out;
}

// ---------------------------------------------------------------------------
// Certificates

Multigraph EmbeddingCertificate::white() const {
  Multigraph g(size());
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) {
      std::int64_t m = -dot(coords[i], coords[j]);
      if (m > 0) g.add_edge(i, j, static_cast<int>(m));
    }
  return g;
}

int EmbeddingCertificate::index_of_id(int id) const {
  for (int i = 0; i < size(); ++i)
    if (ids[i] == id) return i;
  return -1;
}

int EmbeddingCertificate::index_of(const IntVector& x) const {
  for (int i = 0; i < size(); ++i)
    if (coords[i] == x) return i;
  return -1;
}

void EmbeddingCertificate::negate() {
  for (auto& x : coords) x = neg(x);
}

std::vector<std::string> certificate_problems(const EmbeddingCertificate& cert) {
  std::vector<std::string> bad;
  const auto& lat = cert.lattice;
  int n = cert.size();
  if (n < 2) bad.push_back("fewer than two vertices");
  if (static_cast<int>(cert.ids.size()) != n || static_cast<int>(cert.regions.size()) != n)
    bad.push_back("label arrays differ in length from the vertex list");
  if (!bad.empty()) return bad;
  IntVector total(lat.N, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cert.coords[i].size()) != lat.N) {
      bad.push_back("vertex " + std::to_string(cert.ids[i]) + " has the wrong ambient dimension");
      return bad;
    }
    if (!lat.contains(cert.coords[i])) bad.push_back("vertex " + std::to_string(cert.ids[i]) + " is not orthogonal to every w_i");
    total = add(total, cert.coords[i]);
  }
  if (!is_zero(total)) bad.push_back("vertices do not sum to zero");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dot(cert.coords[i], cert.coords[j]) > 0)
        bad.push_back("vertices " + std::to_string(cert.ids[i]) + " and " + std::to_string(cert.ids[j]) +
                      " pair positively");
  if (!bad.empty()) return bad;
  Multigraph g = cert.white();
  if (!is_connected(g)) bad.push_back("white graph is disconnected");
  else if (!is_two_connected(g)) bad.push_back("white graph is not 2-connected");
  if (!is_planar(g)) bad.push_back("white graph is not planar");
  if (n - 1 != lat.rank()) {
    bad.push_back("vertex count does not match the lattice rank");
  } else {
    std::vector<IntVector> basis(cert.coords.begin(), cert.coords.end() - 1);
    if (determinant(gram_of(basis)) != lat.slope.p) bad.push_back("vertices do not span the lattice");
  }
  if (cert.source_white.n > 0) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int a = cert.regions[i], b = cert.regions[j];
        if (a < 0 || b < 0) continue;
        if (cert.source_white.multiplicity(a, b) != -dot(cert.coords[i], cert.coords[j]))
          bad.push_back("pairing of regions " + std::to_string(a) + " and " + std::to_string(b) +
                        " differs from the diagram");
      }
  }
  return bad;
}

void validate_certificate(const EmbeddingCertificate& cert) {
  auto bad = certificate_problems(cert);
  ensure(bad.empty(), "invalid certificate: " + (bad.empty() ? std::string() : bad.front()));
}

std::optional<EmbeddingCertificate> recognize(const GramLattice& goeritz, const Slope& slope, std::int64_t budget) {
  require(goeritz.is_symmetric() && is_positive_definite(goeritz), "recognize: Goeritz form must be positive definite");
  for (int i = 0; i < goeritz.rank(); ++i)
    require(goeritz.gram[i][i] != 1, "recognize: norm-1 basis vector (diagram is not reduced)");
  if (determinant(goeritz.gram) != slope.p) return std::nullopt;
  for (auto& cand : candidate_cm_lattices(slope, goeritz.rank())) {
    auto iso = find_isometry(goeritz, cand.gram, budget);
    if (!iso) continue;
    EmbeddingCertificate cert;
    cert.lattice = cand;
    IntVector total(cand.N, 0);
    for (const auto& row : iso->matrix) {
      cert.coords.push_back(cand.embed(row));
      total = add(total, cert.coords.back());
    }
    cert.coords.push_back(neg(total));
    for (int i = 0; i < cert.size(); ++i) {
      cert.ids.push_back(i);
      cert.regions.push_back(-1);
    }
    cert.next_id = cert.size();
    return cert;
  }
  return std::nullopt;
}

std::optional<EmbeddingCertificate> recognize_diagram(const DiagramData& d, const Slope& slope, std::int64_t budget) {
  const auto& gd = d.goeritz;
  auto cert = recognize(gd.goeritz, slope, budget);
  if (!cert) return std::nullopt;
  // Goeritz basis order is the white vertices without the dropped one;
  // the dropped vertex received minus the sum, as the last entry.
  int n = gd.white_graph.n;
  std::vector<IntVector> coords(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    if (i != gd.dropped) coords[i] = cert->coords[k++];
  coords[gd.dropped] = cert->coords.back();
  cert->coords = coords;
  for (int i = 0; i < n; ++i) {
    cert->ids[i] = i;
    cert->regions[i] = i;
  }
  cert->source_white = gd.white_graph;
  cert->source_edge_crossing = gd.edge_crossing;
  validate_certificate(*cert);
  return cert;
}

Markers marker_vertices(const EmbeddingCertificate& cert) {
  require(!cert.lattice.integral(), "marker vertices need a non-integer slope");
  Markers mk;
  int e0 = cert.lattice.e(0);
  for (int i = 0; i < cert.size(); ++i) {
    std::int64_t c = cert.coords[i][e0];
    if (c == 0) continue;
    ensure(c == 1 || c == -1, "vertex pairs with e_0 beyond +-1");
    int& slot = c > 0 ? mk.v : mk.w;
    ensure(slot < 0, "marker vertex is not unique");
    slot = i;
  }
  ensure(mk.v >= 0 && mk.w >= 0, "marker vertices missing");
  mk.marked = static_cast<int>(-dot(cert.coords[mk.v], cert.coords[mk.w]));
  int a = cert.regions[mk.v], b = cert.regions[mk.w];
  if (cert.source_white.n > 0 && a >= 0 && b >= 0) {
    for (int e = 0; e < static_cast<int>(cert.source_white.edges.size()); ++e) {
      auto [x, y] = cert.source_white.edges[e];
      if ((x == a && y == b) || (x == b && y == a)) mk.crossings.push_back(cert.source_edge_crossing[e]);
    }
    std::sort(mk.crossings.begin(), mk.crossings.end());
  }
  return mk;
}

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::FlypeSplit: return "flype-split";
    case MoveKind::FlypeTwist: return "flype-twist";
    case MoveKind::Untongue: return "untongue";
    case MoveKind::UntwirlA2: return "untwirl-A2";
    case MoveKind::UntwirlB: return "untwirl-B";
  }
  return "?";
}

std::string to_string(Situation s) {
  switch (s) {
    case Situation::A1: return "A1";
    case Situation::A2: return "A2";
    case Situation::B: return "B";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Flypes

Move flype_split(EmbeddingCertificate& cert, int v, const IntVector& x, const IntVector& y) {
  require(v >= 0 && v < cert.size(), "flype_split: vertex out of range");
  require(add(x, y) == cert.coords[v], "flype_split: x + y differs from the vertex");
  require(dot(x, y) == -1, "flype_split: x . y must be -1");
  require(cert.lattice.contains(x), "flype_split: x is not in the lattice");
  int u1 = -1, u2 = -1;
  for (int i = 0; i < cert.size(); ++i) {
    if (i == v) continue;
    if (dot(cert.coords[i], x) > 0) {
      require(u1 < 0, "flype_split: more than one vertex pairs positively with x");
      u1 = i;
    }
    if (dot(cert.coords[i], y) > 0) {
      require(u2 < 0, "flype_split: more than one vertex pairs positively with y");
      u2 = i;
    }
  }
  require(u1 >= 0 && u2 >= 0 && u1 != u2, "flype_split: no cut edge realises this splitting");
  Move move{MoveKind::FlypeSplit, {cert.ids[v], cert.ids[u1], cert.ids[u2]}, {}, ""};
  IntVector merged = add(cert.coords[u1], cert.coords[u2]);
  std::vector<IntVector> coords;
  std::vector<int> ids, regions;
  for (int i = 0; i < cert.size(); ++i)
    if (i != v && i != u1 && i != u2) {
      coords.push_back(cert.coords[i]);
      ids.push_back(cert.ids[i]);
      regions.push_back(cert.regions[i]);
    }
  for (const IntVector* z : std::initializer_list<const IntVector*>{&x, &y, &merged}) {
    coords.push_back(*z);
    ids.push_back(cert.next_id);
    regions.push_back(-1);
    move.added.push_back(cert.next_id++);
  }
  cert.coords = coords;
  cert.ids = ids;
  cert.regions = regions;
  validate_certificate(cert);
  return move;
}

Move flype_twist(EmbeddingCertificate& cert, int v, int w, const std::vector<int>& component) {
  require(v != w && v >= 0 && w >= 0 && v < cert.size() && w < cert.size(), "flype_twist: bad cut set");
  require(dot(cert.coords[v], cert.coords[w]) < 0, "flype_twist: no edge between the cut-set vertices");
  Multigraph g = cert.white();
  std::vector<bool> in(cert.size(), false);
  for (int z : component) {
    require(z >= 0 && z < cert.size() && z != v && z != w, "flype_twist: component vertex out of range");
    in[z] = true;
  }
  require(!component.empty() && induces_connected(g, in), "flype_twist: component is not connected");
  // A component of G \ {v, w}: no edges from it to the rest of G \ {v, w}.
  for (auto [a, b] : g.edges)
    if (in[a] != in[b] && a != v && a != w && b != v && b != w)
      throw InputError("flype_twist: vertex set is not a component of the graph minus {v, w}");
  IntVector sum(cert.lattice.N, 0);
  for (int z : component) sum = add(sum, cert.coords[z]);
  for (int z : component) cert.coords[z] = neg(cert.coords[z]);
  cert.coords[v] = add(cert.coords[v], sum);
  cert.coords[w] = add(cert.coords[w], sum);
  Move move{MoveKind::FlypeTwist, {}, {}, "component of size " + std::to_string(component.size())};
  for (int z : component) move.removed.push_back(cert.ids[z]);
  move.added = move.removed;
  validate_certificate(cert);
  return move;
}

// ---------------------------------------------------------------------------
// Fractional tangle

namespace {

IntVector fractional_of(const ChangemakerLattice& lat, const IntVector& x) {
  IntVector out(x.begin(), x.begin() + lat.s + 1);
  return out;
}

}  // namespace

FractionalTangle fractional_tangle(const EmbeddingCertificate& input) {
  const auto& lat = input.lattice;
  require(!lat.integral(), "fractional tangle needs a non-integer slope");
  FractionalTangle out;
  out.cert = input;
  auto& cert = out.cert;
  int m = lat.m();
  std::vector<IntVector> mu_f;
  for (const auto& x : lat.mu) mu_f.push_back(fractional_of(lat, x));

  // Make mu_m, ..., mu_1 vertices: a vertex u with u_F = mu_a + ... + mu_c
  // (a < c) splits as (u - mu_c) + mu_c.
  for (int guard = 0;; ++guard) {
    ensure(guard <= (m + 1) * (cert.size() + 1), "fractional_tangle: flypes do not terminate");
    int c = -1;
    for (int i = m; i >= 1; --i)
      if (cert.index_of(lat.mu[i]) < 0) {
        c = i;
        break;
      }
    if (c < 0) break;
    int found = -1;
    for (int i = 0; i < cert.size() && found < 0; ++i) {
      IntVector f = fractional_of(lat, cert.coords[i]);
      IntVector run(f.size(), 0);
      for (int a = c; a >= 0; --a) {
        run = add(run, mu_f[a]);
        if (a < c && f == run) {
          found = i;
          break;
        }
      }
    }
    ensure(found >= 0, "fractional_tangle: no vertex carries mu_" + std::to_string(c));
    out.trace.push_back(flype_split(cert, found, sub(cert.coords[found], lat.mu[c]), lat.mu[c]));
  }

  Markers mk = marker_vertices(cert);
  out.v = mk.v;
  out.w = mk.w;
  IntVector all_mu(mu_f[0].size(), 0);
  for (const auto& f : mu_f) all_mu = add(all_mu, f);
  ensure(fractional_of(lat, cert.coords[mk.v]) == mu_f[0], "fractional_tangle: v_F differs from mu_0");
  ensure(fractional_of(lat, cert.coords[mk.w]) == neg(all_mu), "fractional_tangle: w_F differs from -(mu_0+...+mu_m)");
  for (int i = 1; i <= m; ++i) out.mu_vertices.push_back(cert.index_of(lat.mu[i]));

  // The tangle: every edge at mu_1..mu_m plus |v_F . w_F| - 1 edges v-w.
  Multigraph g = cert.white();
  std::set<int> mus(out.mu_vertices.begin(), out.mu_vertices.end());
  std::int64_t vw_inside = std::abs(dot(mu_f[0], all_mu)) - 1;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto [a, b] = g.edges[e];
    if (mus.count(a) || mus.count(b)) {
      out.tangle_edges.push_back(e);
    } else if (((a == mk.v && b == mk.w) || (a == mk.w && b == mk.v)) && vw_inside > 0) {
      out.tangle_edges.push_back(e);
      --vw_inside;
    }
  }
  ensure(vw_inside == 0, "fractional_tangle: too few edges between the marker vertices");
  std::vector<int> chain{mk.v};
  chain.insert(chain.end(), out.mu_vertices.begin(), out.mu_vertices.end());
  chain.push_back(mk.w);
  auto slope = tangle_slope_detect(g, chain, out.tangle_edges);
  ensure(slope.has_value(), "fractional_tangle: regions do not form a rational tangle");
  out.slope = *slope;
  std::int64_t q = lat.slope.q, r = lat.slope.r();
  std::int64_t gq = std::gcd(q - r, r);
  out.expected = TangleSlope{(q - r) / gq, r / gq};

  // Replace the tangle by one crossing: drop mu_1..mu_m and keep the
  // integral parts, with x.e_0 repeated on e_1.
  std::int64_t n = lat.slope.ceil();
  ChangemakerLattice half = cm_build_sigma(Slope(2 * n - 1, 2), lat.sigma);
  EmbeddingCertificate& col = out.collapsed;
  col.lattice = half;
  col.next_id = cert.next_id;
  for (int i = 0; i < cert.size(); ++i) {
    if (mus.count(i)) continue;
    IntVector x(half.N, 0);
    x[half.e(0)] = cert.coords[i][lat.e(0)];
    x[half.e(1)] = cert.coords[i][lat.e(0)];
    for (int j = 1; j <= lat.t; ++j) x[half.f(j)] = cert.coords[i][lat.f(j)];
    col.coords.push_back(x);
    col.ids.push_back(cert.ids[i]);
    col.regions.push_back(-1);
  }
  validate_certificate(col);
  return out;
}

// ---------------------------------------------------------------------------
// Clasp reduction (half-integer certificates, ambient <e_0, e_1, f_1..f_t>)

namespace {

constexpr int kE0 = 0;
constexpr int kE1 = 1;
inline int F(int i) { return 1 + i; }

void require_half_integer(const EmbeddingCertificate& cert) {
  require(cert.lattice.slope.q == 2 && cert.lattice.s == 1, "clasp reduction needs a half-integer certificate");
}

IntVector unit(int n, int i) {
  IntVector x(n, 0);
  x[i] = 1;
  return x;
}

IntVector standard_v(int n) {
  IntVector v(n, 0);
  v[F(1)] = -1;
  v[kE0] = 1;
  v[kE1] = 1;
  return v;
}

// Indices (1-based, each in `allowed`) of sigma summing to target; the
// lexicographically largest index set reachable in a 0/1 knapsack.
std::optional<std::vector<int>> subset_with_sum(const Coeffs& sigma, std::int64_t target, const std::vector<int>& allowed) {
  if (target < 0) return std::nullopt;
  std::vector<int> parent(target + 1, -2);  // index used to reach a sum; -1 marks zero
  parent[0] = -1;
  for (int idx : allowed) {
    std::int64_t val = sigma[idx - 1];
    for (std::int64_t s = target; s >= val; --s)
      if (parent[s] == -2 && parent[s - val] != -2 && parent[s - val] != idx) parent[s] = idx;
  }
  if (parent[target] == -2) return std::nullopt;
  std::vector<int> chosen;
  for (std::int64_t s = target; s > 0;) {
    int idx = parent[s];
    chosen.push_back(idx);
    s -= sigma[idx - 1];
  }
  std::sort(chosen.begin(), chosen.end());
  ensure(std::adjacent_find(chosen.begin(), chosen.end()) == chosen.end(), "subset_with_sum: index reused");
  return chosen;
}

std::vector<int> index_range(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

int max_unit_index(const Coeffs& sigma) {
  int k = 0;
  for (int i = 1; i <= static_cast<int>(sigma.size()); ++i)
    if (sigma[i - 1] == 1) k = i;
  return k;
}

// Lemma markedcexist: fix the sign so v.f_1 <= 0, then flype until
// v = -f_1 + e_0 + e_1.
void place_marker(EmbeddingCertificate& cert, MoveTrace& trace) {
  int n = cert.lattice.N;
  Markers mk = marker_vertices(cert);
  if (cert.coords[mk.v][F(1)] > 0) {
    cert.negate();
    mk = marker_vertices(cert);
  }
  const IntVector& v = cert.coords[mk.v];
  IntVector vstd = standard_v(n);
  ensure(v[F(1)] == 0 || v[F(1)] == -1, "marker vertex pairs with f_1 outside {0, -1} after the sign choice");
  if (v[F(1)] == -1) {
    ensure(v == vstd, "marker vertex with v.f_1 = -1 is not -f_1 + e_0 + e_1");
    return;
  }
  trace.push_back(flype_split(cert, mk.v, sub(v, vstd), vstd));
}

// Lemma flypetostd: make v_m = -f_m + f_{m-1} vertices for 2 <= m <= k.
void flype_to_standard(EmbeddingCertificate& cert, MoveTrace& trace) {
  int n = cert.lattice.N;
  int k = max_unit_index(cert.lattice.sigma);
  IntVector prev = standard_v(n);
  for (int m = 2; m <= k; ++m) {
    IntVector vm(n, 0);
    vm[F(m)] = -1;
    vm[F(m - 1)] = 1;
    if (cert.index_of(vm) < 0) {
      int found = -1;
      for (int i = 0; i < cert.size() && found < 0; ++i) {
        const auto& x = cert.coords[i];
        if (dot(x, prev) == -1 && dot(x, vm) == 1 && dot(sub(x, vm), vm) == -1) found = i;
      }
      ensure(found >= 0, "flype_to_standard: no vertex splits off v_" + std::to_string(m));
      trace.push_back(flype_split(cert, found, sub(cert.coords[found], vm), vm));
      for (int j = 2; j < m; ++j) {
        IntVector vj(n, 0);
        vj[F(j)] = -1;
        vj[F(j - 1)] = 1;
        ensure(cert.index_of(vj) >= 0, "flype_to_standard: earlier chain vertex lost");
      }
      ensure(cert.index_of(standard_v(n)) >= 0, "flype_to_standard: marker vertex lost");
    }
    prev = vm;
  }
}

int support_max(const IntVector& x) {
  int best = 0;
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (x[i] != 0) best = i;
  return best;
}

// Lemma tightflyping: w = f_g - f_{g-1} - ... - f_1 - e_0 - e_1.
void flype_tight(EmbeddingCertificate& cert, MoveTrace& trace) {
  const auto& sigma = cert.lattice.sigma;
  int t = cert.lattice.t, n = cert.lattice.N;
  int k = max_unit_index(sigma);
  for (int guard = 0;; ++guard) {
    ensure(guard <= n + 1, "flype_tight: flypes do not terminate");
    Markers mk = marker_vertices(cert);
    const IntVector w = cert.coords[mk.w];
    int gp = -1;
    for (int i = 1; i <= t && gp < 0; ++i)
      if (w[F(i)] >= 0) gp = i;
    ensure(gp > 1, "flype_tight: marker vertex w has no nonnegative f-coefficient beyond f_1");
    // Any A with sigma_{g'} - 1 = sum_A sigma contains {1..k}.
    auto rest = subset_with_sum(sigma, sigma[gp - 1] - 1 - k, index_range(k + 1, gp - 1));
    ensure(rest.has_value(), "flype_tight: no subset realises sigma_g' - 1");
    IntVector wp(n, 0);
    wp[F(gp)] = 1;
    wp[kE0] = -1;
    wp[kE1] = -1;
    for (int i = 1; i <= k; ++i) wp[F(i)] = -1;
    for (int i : *rest) wp[F(i)] = -1;
    if (w == wp) return;
    IntVector diff = sub(w, wp);
    ensure(dot(diff, wp) == -1, "flype_tight: (w - w').w' is not -1");
    int before = support_max(w);
    trace.push_back(flype_split(cert, mk.w, diff, wp));
    ensure(support_max(cert.coords[marker_vertices(cert).w]) < before, "flype_tight: support did not shrink");
  }
}

// The neighbours of v other than w, with their multiplicities.
std::vector<std::pair<int, int>> neighbours_of(const EmbeddingCertificate& cert, int v, int skip) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < cert.size(); ++i) {
    if (i == v || i == skip) continue;
    std::int64_t p = dot(cert.coords[i], cert.coords[v]);
    if (p < 0) out.push_back({i, static_cast<int>(-p)});
  }
  return out;
}

// Lemma slackflyping: u_1 = -f_h + f_{h-1} + ... + f_1.
void flype_slack(EmbeddingCertificate& cert, MoveTrace& trace) {
  const auto& sigma = cert.lattice.sigma;
  int t = cert.lattice.t, n = cert.lattice.N;
  int k = max_unit_index(sigma);
  ensure(k >= 2, "flype_slack: slack tuple with a single unit coefficient");
  IntVector v2(n, 0);
  v2[F(2)] = -1;
  v2[F(1)] = 1;
  for (int guard = 0;; ++guard) {
    ensure(guard <= n + 1, "flype_slack: flypes do not terminate");
    Markers mk = marker_vertices(cert);
    int iu1 = -1;
    for (auto [i, mult] : neighbours_of(cert, mk.v, mk.w))
      if (cert.coords[i] != v2) {
        ensure(mult == 1 && iu1 < 0, "flype_slack: not in situation A");
        iu1 = i;
      }
    ensure(iu1 >= 0, "flype_slack: adjacent vertex u_1 missing");
    const IntVector u1 = cert.coords[iu1];
    int hp = -1;
    for (int i = 1; i <= t && hp < 0; ++i)
      if (u1[F(i)] <= 0) hp = i;
    ensure(hp > k, "flype_slack: u_1 has the wrong shape");
    auto rest = subset_with_sum(sigma, sigma[hp - 1] - 1, index_range(2, hp - 1));
    ensure(rest.has_value(), "flype_slack: no subset containing 1 realises sigma_h'");
    IntVector up(n, 0);
    up[F(hp)] = -1;
    up[F(1)] = 1;
    for (int i : *rest) up[F(i)] = 1;
    if (u1 == up) return;
    IntVector diff = sub(u1, up);
    ensure(dot(diff, up) == -1, "flype_slack: (u_1 - u_1').u_1' is not -1");
    int before = support_max(u1);
    trace.push_back(flype_split(cert, iu1, diff, up));
    ensure(cert.index_of(up) >= 0 && support_max(up) < before, "flype_slack: support did not shrink");
  }
}

}  // namespace

MoveTrace normalize_to_standard_form(EmbeddingCertificate& cert) {
  require_half_integer(cert);
  validate_certificate(cert);
  MoveTrace trace;
  place_marker(cert, trace);
  if (is_clasp_stage(cert)) return trace;  // several marked crossings: nothing to normalize
  Markers mk = marker_vertices(cert);
  require(mk.marked == 1, "normalize_to_standard_form: needs a single marked crossing");
  flype_to_standard(cert, trace);
  if (tightness(cert.lattice.sigma).tight)
    flype_tight(cert, trace);
  else
    flype_slack(cert, trace);
  mk = marker_vertices(cert);
  ensure(mk.marked == 1, "normalize_to_standard_form: flypes changed the marked crossings");
  ensure(cert.coords[mk.v] == standard_v(cert.lattice.N), "normalize_to_standard_form: v lost its standard form");
  return trace;
}

StandardForm classify_situation(const EmbeddingCertificate& cert) {
  require_half_integer(cert);
  Markers mk = marker_vertices(cert);
  int n = cert.lattice.N;
  require(cert.coords[mk.v] == standard_v(n), "classify_situation: v is not -f_1 + e_0 + e_1");
  require(mk.marked == 1, "classify_situation: needs a single marked crossing");
  StandardForm form;
  form.v = mk.v;
  form.w = mk.w;
  auto nb = neighbours_of(cert, mk.v, mk.w);
  if (nb.size() == 1) {
    ensure(nb[0].second == 2, "classify_situation: v has the wrong degree");
    form.situation = Situation::B;
    form.adjacent = {nb[0].first};
    return form;
  }
  ensure(nb.size() == 2 && nb[0].second == 1 && nb[1].second == 1, "classify_situation: v has the wrong degree");
  IntVector v2(n, 0);
  if (cert.lattice.t >= 2) {
    v2[F(2)] = -1;
    v2[F(1)] = 1;
  }
  int a = nb[0].first, b = nb[1].first;
  // u_1 is the adjacent vertex sharing an edge with w (preferring the one
  // that is not the chain vertex v_2); u_2 is the other.
  auto touches_w = [&](int i) { return dot(cert.coords[i], cert.coords[mk.w]) < 0; };
  bool a_first = (touches_w(a) && cert.coords[a] != v2) || (!touches_w(b));
  if (!a_first) std::swap(a, b);
  form.adjacent = {a, b};
  form.situation = cert.coords[mk.w][F(2)] == 0 && cert.lattice.t >= 2 ? Situation::A2 : Situation::A1;
  if (form.situation == Situation::A2) {
    // Untwirl data: u_2 = v_2 and u_1 the other neighbour.
    if (cert.coords[form.adjacent[0]] == v2) std::swap(form.adjacent[0], form.adjacent[1]);
    ensure(cert.coords[form.adjacent[1]] == v2, "classify_situation: A2 without v_2 adjacent");
  }
  return form;
}

EmbeddingCertificate identify_half_integer(std::vector<IntVector> coords, const std::vector<int>& ids,
                                           const std::vector<int>& regions, int next_id) {
  require(coords.size() >= 2, "identify_half_integer: need at least two vertices");
  int n = static_cast<int>(coords[0].size());
  for (const auto& x : coords) ensure(x[kE0] == x[kE1], "identify_half_integer: vertex with x.e_0 != x.e_1");
  std::vector<IntVector> basis(coords.begin(), coords.end() - 1);
  auto comp = orthogonal_complement(basis, n);
  ensure(comp.size() == 2, "identify_half_integer: complement is not of rank 2");
  // Eliminate e_1 from the complement: the remaining generator is w_0.
  IntVector z = sub(scale(comp[0][kE1], comp[1]), scale(comp[1][kE1], comp[0]));
  std::int64_t g = 0;
  for (auto c : z) g = std::gcd(g, std::abs(c));
  ensure(g > 0, "identify_half_integer: degenerate complement");
  for (auto& c : z) c /= g;
  if (z[kE0] < 0) z = neg(z);
  ensure(z[kE0] == 1, "identify_half_integer: w_0 does not have e_0-coefficient 1");
  int t = n - 2;
  std::vector<int> order(t);
  std::iota(order.begin(), order.end(), 1);
  for (int j = 1; j <= t; ++j) ensure(z[F(j)] != 0, "identify_half_integer: unused coordinate f_" + std::to_string(j));
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return std::abs(z[F(a)]) < std::abs(z[F(b)]); });
  Coeffs sigma;
  for (int j : order) sigma.push_back(std::abs(z[F(j)]));
  ensure(changemaker_check(sigma), "identify_half_integer: coefficients fail the changemaker condition");
  for (auto& x : coords) {
    IntVector y(n, 0);
    y[kE0] = x[kE0];
    y[kE1] = x[kE1];
    for (int i = 0; i < t; ++i) {
      int j = order[i];
      y[F(i + 1)] = z[F(j)] > 0 ? x[F(j)] : -x[F(j)];
    }
    x = y;
  }
  std::int64_t sq = 0;
  for (auto s : sigma) sq += s * s;
  EmbeddingCertificate cert;
  cert.lattice = cm_build_sigma(Slope(2 * (sq + 1) - 1, 2), sigma);
  cert.coords = std::move(coords);
  cert.ids = ids;
  cert.regions = regions;
  cert.next_id = next_id;
  validate_certificate(cert);
  return cert;
}

EmbeddingCertificate descend(const EmbeddingCertificate& cert, const StandardForm& form, Move* move) {
  require_half_integer(cert);
  int n = cert.lattice.N;
  const IntVector& w = cert.coords[form.w];
  ensure(w[F(1)] == -1, "descend: w.f_1 must be -1");
  IntVector w_t = add(w, unit(n, F(1)));
  IntVector e01(n, 0);
  e01[kE0] = 1;
  e01[kE1] = 1;
  std::vector<int> removed{form.v, form.w};
  std::vector<IntVector> added;
  std::vector<int> drop;
  MoveKind kind = MoveKind::Untongue;
  switch (form.situation) {
    case Situation::A1: {
      const IntVector& u1 = cert.coords[form.adjacent[0]];
      const IntVector& u2 = cert.coords[form.adjacent[1]];
      ensure(u1[F(1)] == 1 && u2[F(1)] == 1, "descend: adjacent vertices must have f_1-coefficient 1");
      ensure(dot(u1, w) < 0, "descend: no edge between u_1 and w");
      IntVector u1_t = sub(u1, unit(n, F(1))), u2_t = sub(u2, unit(n, F(1)));
      added = {add(u2_t, e01), w_t, u1_t};
      removed.push_back(form.adjacent[0]);
      removed.push_back(form.adjacent[1]);
      drop = {F(1)};
      kind = MoveKind::Untongue;
      break;
    }
    case Situation::A2: {
      const IntVector& u1 = cert.coords[form.adjacent[0]];
      ensure(u1[F(1)] == 1 && u1[F(2)] == 1 && w[F(2)] == 0, "descend: situation A2 has the wrong shape");
      IntVector u_t = sub(sub(u1, unit(n, F(1))), unit(n, F(2)));
      added = {add(u_t, e01), w_t};
      removed.push_back(form.adjacent[0]);
      removed.push_back(form.adjacent[1]);
      drop = {F(1), F(2)};
      kind = MoveKind::UntwirlA2;
      break;
    }
    case Situation::B: {
      const IntVector& u = cert.coords[form.adjacent[0]];
      ensure(u[F(1)] == 2, "descend: situation B needs u.f_1 = 2");
      IntVector u_t = sub(u, scale(2, unit(n, F(1))));
      added = {add(u_t, e01), w_t};
      removed.push_back(form.adjacent[0]);
      drop = {F(1)};
      kind = MoveKind::UntwirlB;
      break;
    }
  }
  std::set<int> gone(removed.begin(), removed.end());
  std::vector<IntVector> coords;
  std::vector<int> ids, regions;
  int next_id = cert.next_id;
  Move mv{kind, {}, {}, "situation " + to_string(form.situation)};
  for (int i : removed) mv.removed.push_back(cert.ids[i]);
  auto shrink = [&](const IntVector& x) {
    IntVector y;
    for (int i = 0; i < n; ++i) {
      if (std::find(drop.begin(), drop.end(), i) != drop.end()) {
        ensure(x[i] == 0, "descend: substituted vertex still uses a dropped coordinate");
        continue;
      }
      y.push_back(x[i]);
    }
    return y;
  };
  for (int i = 0; i < cert.size(); ++i) {
    if (gone.count(i)) continue;
    coords.push_back(shrink(cert.coords[i]));
    ids.push_back(cert.ids[i]);
    regions.push_back(cert.regions[i]);
  }
  for (const auto& x : added) {
    coords.push_back(shrink(x));
    ids.push_back(next_id);
    regions.push_back(-1);
    mv.added.push_back(next_id++);
  }
  EmbeddingCertificate out = identify_half_integer(coords, ids, regions, next_id);
  ensure(out.lattice.rank() < cert.lattice.rank(), "descend: rank did not decrease");
  Markers mk = marker_vertices(out);
  ensure(mk.marked >= 1 && mk.marked <= 3, "descend: new marker pair carries no marked crossing");
  if (move) *move = mv;
  return out;
}

bool is_clasp_stage(const EmbeddingCertificate& cert) {
  Markers mk = marker_vertices(cert);
  if (mk.marked < 2) return false;
  Multigraph g = cert.white();
  Multigraph h(g.n);
  int skipped = 0;
  for (auto [a, b] : g.edges) {
    bool vw = (a == mk.v && b == mk.w) || (a == mk.w && b == mk.v);
    if (vw && skipped < 2) {
      ++skipped;
      continue;
    }
    h.add_edge(a, b);
  }
  if (!is_connected(h) || static_cast<int>(h.edges.size()) != h.n - 1) return false;
  for (int x = 0; x < h.n; ++x) {
    int d = h.degree(x);
    bool end = x == mk.v || x == mk.w;
    if (d > 2 || (end && d != 1)) return false;
  }
  return true;
}

Reduction reduce_to_clasp(EmbeddingCertificate cert) {
  require_half_integer(cert);
  validate_certificate(cert);
  Reduction out;
  for (int stage = 0;; ++stage) {
    ensure(stage <= cert.lattice.rank() + out.stages() + 1, "reduce_to_clasp: too many stages");
    place_marker(cert, out.trace);
    Markers mk = marker_vertices(cert);
    out.ranks.push_back(cert.lattice.rank());
    out.marked_counts.push_back(mk.marked);
    out.history.push_back(cert);
    ensure(mk.marked >= 1 && mk.marked <= 3, "reduce_to_clasp: marked crossing count outside 1..3");
    if (mk.marked >= 2) {
      ensure(is_clasp_stage(cert), "reduce_to_clasp: multi-marked certificate is not a clasp");
      out.final_cert = cert;
      return out;
    }
    auto flypes = normalize_to_standard_form(cert);
    out.trace.insert(out.trace.end(), flypes.begin(), flypes.end());
    StandardForm form = classify_situation(cert);
    Move mv{MoveKind::Untongue, {}, {}, ""};
    int rank = cert.lattice.rank();
    cert = descend(cert, form, &mv);
    ensure(cert.lattice.rank() < rank, "reduce_to_clasp: rank did not decrease");
    out.trace.push_back(mv);
  }
}

}  // namespace altsurg
