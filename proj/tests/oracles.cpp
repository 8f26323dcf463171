#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "altsurg/knotdiag.hpp"

namespace oracle {

Rational lens_d(std::int64_t p, std::int64_t q, std::int64_t i) {
  if (p == 1) return Rational(0);
  std::int64_t num = 2 * i + 1 - p - q;
  return Rational(-1, 4) + Rational(num * num, 4 * p * q) - lens_d(q, p % q, i % q);
}

bool subset_sums_cover(const std::vector<std::int64_t>& sigma) {
  std::int64_t total = std::accumulate(sigma.begin(), sigma.end(), std::int64_t{0});
  std::vector<bool> hit(total + 1, false);
  std::size_t t = sigma.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < t; ++i)
      if (mask >> i & 1) s += sigma[i];
    hit[s] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool connected(const Multigraph& g, int skip_vertex, int skip_edge) {
  std::vector<std::vector<int>> adj(g.n);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (e == skip_edge) continue;
    auto [a, b] = g.edges[e];
    if (a == skip_vertex || b == skip_vertex) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int start = skip_vertex == 0 ? 1 : 0;
  if (start >= g.n) return true;
  std::vector<bool> seen(g.n, false);
  std::queue<int> todo;
  todo.push(start);
  seen[start] = true;
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        todo.push(y);
      }
  }
  for (int x = 0; x < g.n; ++x)
    if (x != skip_vertex && !seen[x]) return false;
  return true;
}

bool brute_has_cut_edge(const Multigraph& g) {
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
    if (!connected(g, -1, e)) return true;
  return false;
}

bool brute_two_connected(const Multigraph& g) {
  if (!connected(g)) return false;
  for (int v = 0; v < g.n; ++v)
    if (!connected(g, v)) return false;
  return true;
}

namespace {

std::int64_t trees(int n, std::vector<std::pair<int, int>> edges) {
  if (n == 1) return 1;
  edges.erase(std::remove_if(edges.begin(), edges.end(), [](auto e) { return e.first == e.second; }), edges.end());
  if (edges.empty()) return 0;
  Multigraph g(n);
  g.edges = edges;
  if (!connected(g)) return 0;
  auto [a, b] = edges.back();
  edges.pop_back();
  std::int64_t without = trees(n, edges);
  // Contract b into a, then renumber the last vertex as b.
  for (auto& [x, y] : edges) {
    if (x == b) x = a;
    if (y == b) y = a;
    if (x == n - 1) x = b;
    if (y == n - 1) y = b;
  }
  return without + trees(n - 1, edges);
}

}  // namespace

std::int64_t tree_count(const Multigraph& g) { return trees(g.n, g.edges); }

std::vector<std::int64_t> torus_alexander(std::int64_t r, std::int64_t s) {
  std::int64_t two_g = (r - 1) * (s - 1);
  std::int64_t top = two_g + 1;
  std::vector<bool> in_semigroup(top + 1, false);
  for (std::int64_t x = 0; x <= top; x += r)
    for (std::int64_t y = x; y <= top; y += s) in_semigroup[y] = true;
  // (1 - t) * sum_{n in S} t^n truncated at degree 2g.
  std::vector<std::int64_t> full(two_g + 1, 0);
  for (std::int64_t n = 0; n <= two_g; ++n) {
    if (in_semigroup[n]) full[n] += 1;
    if (n >= 1 && in_semigroup[n - 1]) full[n] -= 1;
  }
  std::int64_t g = two_g / 2;
  std::vector<std::int64_t> sym(full.begin() + g, full.end());
  return sym;
}

std::vector<std::int64_t> v_brute(const std::vector<std::int64_t>& sigma) {
  std::int64_t total = 0;
  for (auto x : sigma) total += x * x;
  std::int64_t sum = std::accumulate(sigma.begin(), sigma.end(), std::int64_t{0});
  std::int64_t g = (total - sum) / 2;
  const int bound = 4;
  std::size_t t = sigma.size();
  std::map<std::int64_t, std::int64_t> best;  // a . sigma -> min cost
  std::vector<int> a(t, -bound);
  for (;;) {
    std::int64_t dot = 0, cost = 0;
    for (std::size_t i = 0; i < t; ++i) {
      dot += a[i] * sigma[i];
      cost += static_cast<std::int64_t>(a[i]) * (a[i] + 1) / 2;
    }
    auto it = best.find(dot);
    if (it == best.end() || cost < it->second) best[dot] = cost;
    std::size_t i = 0;
    while (i < t && a[i] == bound) a[i++] = -bound;
    if (i == t) break;
    ++a[i];
  }
  std::vector<std::int64_t> v;
  for (std::int64_t k = 0; k <= g; ++k) v.push_back(best.at(g - k));
  return v;
}

Multigraph two_bridge_graph(const std::vector<int>& c) {
  // Terminals north = 0 and south = 1; tau/rho track trees and 2-forests.
  Multigraph g(2);
  int south = 1;
  g.add_edge(0, south, c[0]);
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (k % 2 == 1) {
      // Series with a path of c_k edges: move the south terminal.
      for (int j = 0; j < c[k]; ++j) {
        int next = g.n++;
        g.add_edge(south, next);
        south = next;
      }
    } else {
      g.add_edge(0, south, c[k]);
    }
  }
  if (c.size() % 2 == 0) {
    // The numerator counts 2-forests: identify the terminals.
    Multigraph merged(g.n - 1);
    auto relabel = [&](int x) {
      if (x == south) return 0;
      return x > south ? x - 1 : x;
    };
    for (auto [a, b] : g.edges) merged.add_edge(relabel(a), relabel(b));
    return merged;
  }
  return g;
}

Multigraph montesinos_3_21_2() {
  Multigraph g(6);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 1);
  g.add_edge(0, 4, 2);
  g.add_edge(4, 1);
  g.add_edge(0, 5);
  g.add_edge(5, 1);
  return g;
}

Multigraph clasp_graph(int length) {
  Multigraph g(length + 1);
  for (int i = 0; i < length; ++i) g.add_edge(i, i + 1);
  g.add_edge(0, length, 2);
  return g;
}

Multigraph insert_twists(Multigraph g, int steps, std::mt19937_64& rng, int max_vertices) {
  for (int s = 0; s < steps; ++s) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.edges.size()) - 1);
    int e = pick(rng);
    bool series = std::uniform_int_distribution<int>(0, 1)(rng) == 0 && g.n < max_vertices;
    auto [a, b] = g.edges[e];
    if (series) {
      int x = g.n++;
      g.edges[e] = {a, x};
      g.add_edge(x, b);
    } else {
      g.add_edge(a, b);
    }
  }
  return g;
}

std::vector<GeneratedCertificate> clasp_family(int count, int max_rank, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GeneratedCertificate> out;
  std::set<std::vector<std::pair<int, int>>> seen;
  for (int attempt = 0; attempt < 200 * count && static_cast<int>(out.size()) < count; ++attempt) {
    int length = std::uniform_int_distribution<int>(1, 3)(rng);
    int steps = std::uniform_int_distribution<int>(0, 6)(rng);
    Multigraph g = insert_twists(clasp_graph(length), steps, rng, max_rank + 1);
    auto key = g.edges;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) continue;
    altsurg::PDCode pd = altsurg::pd_from_planar_graph(g);
    if (pd.components() != 1) continue;
    std::int64_t det = tree_count(g);
    if (det < 3) continue;
    for (const auto& candidate : {pd, altsurg::mirror(pd)}) {
      auto d = altsurg::color_and_white_graph(candidate);
      if (!altsurg::is_reduced(d)) break;
      auto cert = altsurg::recognize_diagram(d, altsurg::Slope(det, 2));
      if (cert && cert->lattice.rank() <= max_rank) {
        out.push_back({d.goeritz.white_graph, *cert});
        break;
      }
    }
  }
  return out;
}

namespace {

using EdgeCounts = std::vector<int>;  // multiplicity per vertex pair (i < j)

std::vector<std::pair<int, int>> pair_list(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

EdgeCounts canonical(const EdgeCounts& m, int n, const std::vector<std::pair<int, int>>& pairs,
                     const std::vector<std::vector<int>>& index) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeCounts best;
  do {
    EdgeCounts img(m.size(), 0);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (!m[e]) continue;
      int a = perm[pairs[e].first], b = perm[pairs[e].second];
      img[index[a][b]] = m[e];
    }
    if (best.empty() || img < best) best = img;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Multigraph> small_multigraphs(int max_n, int max_edges) {
  std::vector<Multigraph> out;
  for (int n = 2; n <= max_n; ++n) {
    auto pairs = pair_list(n);
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      index[pairs[e].first][pairs[e].second] = static_cast<int>(e);
      index[pairs[e].second][pairs[e].first] = static_cast<int>(e);
    }
    std::set<EdgeCounts> level{EdgeCounts(pairs.size(), 0)};
    for (int edges = 1; edges <= max_edges; ++edges) {
      std::set<EdgeCounts> next;
      for (const auto& m : level)
        for (std::size_t e = 0; e < pairs.size(); ++e) {
          EdgeCounts grown = m;
          ++grown[e];
          next.insert(canonical(grown, n, pairs, index));
        }
      level = std::move(next);
      for (const auto& m : level) {
        Multigraph g(n);
        for (std::size_t e = 0; e < pairs.size(); ++e)
          if (m[e]) g.add_edge(pairs[e].first, pairs[e].second, m[e]);
        if (connected(g)) out.push_back(g);
      }
    }
  }
  return out;
}

}  // namespace oracle
