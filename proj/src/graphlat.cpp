#include "altsurg/graphlat.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "altsurg/error.hpp"

namespace altsurg {

int Multigraph::add_edge(int u, int v, int multiplicity) {
  require(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
  require(multiplicity >= 0, "negative edge multiplicity");
  for (int k = 0; k < multiplicity; ++k) edges.emplace_back(u, v);
  return static_cast<int>(edges.size()) - 1;
}

int Multigraph::multiplicity(int u, int v) const {
  int m = 0;
  for (auto [a, b] : edges)
    if ((a == u && b == v) || (a == v && b == u)) ++m;
  return m;
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges)
    if (a != b) d += (a == v) + (b == v);
  return d;
}

bool Multigraph::has_self_loop() const {
  return std::any_of(edges.begin(), edges.end(), [](auto e) { return e.first == e.second; });
}

std::vector<std::vector<int>> Multigraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    if (a == b) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

Multigraph Multigraph::parse(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  require(static_cast<bool>(in >> n) && n >= 0, "graph: expected a vertex count on the first line");
  Multigraph g(n);
  int u = 0, v = 0, m = 0;
  while (in >> u) {
    require(static_cast<bool>(in >> v >> m), "graph: edge lines are 'u v multiplicity'");
    g.add_edge(u, v, m);
  }
  require(in.eof(), "graph: unexpected token");
  return g;
}

std::string Multigraph::str() const {
  std::ostringstream out;
  out << n << "\n";
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v) {
      int m = multiplicity(u, v);
      if (m > 0) out << u << " " << v << " " << m << "\n";
    }
  return out.str();
}

bool induces_connected(const Multigraph& g, const std::vector<bool>& in) {
  auto adj = g.adjacency();
  int start = -1, count = 0;
  for (int v = 0; v < g.n; ++v)
    if (in[v]) {
      ++count;
      if (start < 0) start = v;
    }
  if (count == 0) return true;
  std::vector<bool> seen(g.n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b : adj[a])
      if (in[b] && !seen[b]) {
        seen[b] = true;
        ++reached;
        stack.push_back(b);
      }
  }
  return reached == count;
}

bool is_connected(const Multigraph& g) { return induces_connected(g, std::vector<bool>(g.n, true)); }

IntMatrix laplacian(const Multigraph& g) {
  IntMatrix l(g.n, IntVector(g.n, 0));
  for (auto [a, b] : g.edges) {
    if (a == b) continue;
    ++l[a][a];
    ++l[b][b];
    --l[a][b];
    --l[b][a];
  }
  return l;
}

GramLattice graph_lattice_gram(const Multigraph& g, int dropped) {
  require(g.n >= 1, "graph lattice of the empty graph");
  require(dropped >= 0 && dropped < g.n, "dropped vertex out of range");
  require(!g.has_self_loop(), "graph lattice: self-loops are not allowed");
  require(is_connected(g), "graph lattice: graph is disconnected");
  auto l = laplacian(g);
  IntMatrix out;
  for (int i = 0; i < g.n; ++i) {
    if (i == dropped) continue;
    IntVector row;
    for (int j = 0; j < g.n; ++j)
      if (j != dropped) row.push_back(l[i][j]);
    out.push_back(row);
  }
  return GramLattice(out);
}

IntVector to_gram_coords(const IntVector& coeffs, int dropped) {
  IntVector out;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (static_cast<int>(i) != dropped) out.push_back(coeffs[i] - coeffs[dropped]);
  return out;
}

IntVector normalize_element(IntVector coeffs) {
  if (coeffs.empty()) return coeffs;
  auto lo = *std::min_element(coeffs.begin(), coeffs.end());
  for (auto& c : coeffs) c -= lo;
  return coeffs;
}

std::int64_t spanning_tree_count(const Multigraph& g) {
  if (g.n <= 1) return 1;
  if (!is_connected(g)) return 0;
  Multigraph h = g;
  h.edges.erase(std::remove_if(h.edges.begin(), h.edges.end(), [](auto e) { return e.first == e.second; }),
                h.edges.end());
  return determinant(graph_lattice_gram(h, 0).gram);
}

bool is_planar(const Multigraph& g) {
  using namespace boost;
  using Graph = adjacency_list<vecS, vecS, undirectedS>;
  Graph h(g.n);
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges)
    if (a != b && seen.insert({std::min(a, b), std::max(a, b)}).second) add_edge(a, b, h);
  return boyer_myrvold_planarity_test(h);
}

bool is_two_connected(const Multigraph& g) {
  if (!is_connected(g)) return false;
  for (int v = 0; v < g.n && g.n > 2; ++v) {
    std::vector<bool> in(g.n, true);
    in[v] = false;
    if (!induces_connected(g, in)) return false;
  }
  return true;
}

namespace {

// Bridges of the subgraph induced by `in` (edge indices), by Tarjan lowlink.
std::vector<int> bridges(const Multigraph& g, const std::vector<bool>& in) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto [a, b] = g.edges[e];
    if (a == b || !in[a] || !in[b]) continue;
    adj[a].emplace_back(b, e);
    adj[b].emplace_back(a, e);
  }
  std::vector<int> disc(g.n, -1), low(g.n, 0), out;
  int clock = 0;
  std::function<void(int, int)> dfs = [&](int a, int via) {
    disc[a] = low[a] = clock++;
    for (auto [b, e] : adj[a]) {
      if (e == via) continue;
      if (disc[b] < 0) {
        dfs(b, e);
        low[a] = std::min(low[a], low[b]);
        if (low[b] > disc[a]) out.push_back(e);
      } else {
        low[a] = std::min(low[a], disc[b]);
      }
    }
  };
  for (int v = 0; v < g.n; ++v)
    if (in[v] && disc[v] < 0) dfs(v, -1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> cut_edges(const Multigraph& g) { return bridges(g, std::vector<bool>(g.n, true)); }

bool has_cut_edge(const Multigraph& g) { return !cut_edges(g).empty(); }

bool is_irreducible_sum(const Multigraph& g, const std::vector<bool>& region) {
  require(static_cast<int>(region.size()) == g.n, "region size differs from vertex count");
  int count = static_cast<int>(std::count(region.begin(), region.end(), true));
  require(count > 0 && count < g.n, "region must be nonempty and proper");
  std::vector<bool> rest(g.n);
  for (int v = 0; v < g.n; ++v) rest[v] = !region[v];
  return induces_connected(g, region) && induces_connected(g, rest);
}

std::optional<VertexSplit> split_vertex(const Multigraph& g, int v) {
  require(v >= 0 && v < g.n, "split_vertex: vertex out of range");
  std::vector<bool> in(g.n, true);
  in[v] = false;
  if (!induces_connected(g, in)) return std::nullopt;  // v is not irreducible
  auto bs = bridges(g, in);
  for (int e : bs) {
    // Components of G \ {v} \ {e}.
    Multigraph h(g.n);
    for (int k = 0; k < static_cast<int>(g.edges.size()); ++k)
      if (k != e) h.edges.push_back(g.edges[k]);
    auto [a, b] = g.edges[e];
    std::vector<bool> side(g.n, false);
    auto adj = h.adjacency();
    std::vector<int> stack{a};
    side[a] = true;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int d : adj[c])
        if (d != v && !side[d]) {
          side[d] = true;
          stack.push_back(d);
        }
    }
    VertexSplit sp;
    for (int u = 0; u < g.n; ++u) {
      if (u == v) continue;
      (side[u] ? sp.r : sp.s).push_back(u);
    }
    // The lemma also needs R + v and S + v connected.
    std::vector<bool> rv(g.n, false), sv(g.n, false);
    for (int u : sp.r) rv[u] = true;
    for (int u : sp.s) sv[u] = true;
    rv[v] = sv[v] = true;
    if (!induces_connected(g, rv) || !induces_connected(g, sv)) continue;
    sp.u1 = a;
    sp.u2 = b;
    sp.x.assign(g.n, 0);
    sp.y.assign(g.n, 0);
    sp.x[v] = sp.y[v] = 1;
    for (int u : sp.r) sp.x[u] = 1;
    for (int u : sp.s) sp.y[u] = 1;
    return sp;
  }
  return std::nullopt;
}

}  // namespace altsurg
