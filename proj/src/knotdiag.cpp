#include "altsurg/knotdiag.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "altsurg/error.hpp"

namespace altsurg {

namespace {

// Incidence convention: a crossing has incidence -1 when its white corners
// are the ones between slots 0-1 and 2-3 (corners 0 and 2).  Locked by the
// right-handed trefoil, whose white graph must be the theta graph.
constexpr int kNegativeWhiteCorner = 0;

struct UnionFind {
  std::map<int, int> parent;
  int find(int x) {
    if (!parent.count(x)) parent[x] = x;
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Occurrences of each arc label as (crossing, slot).
std::map<int, std::vector<std::pair<int, int>>> occurrences(const PDCode& pd) {
  std::map<int, std::vector<std::pair<int, int>>> occ;
  for (int c = 0; c < pd.size(); ++c)
    for (int k = 0; k < 4; ++k) occ[pd.crossings[c][k]].emplace_back(c, k);
  return occ;
}

std::pair<int, int> other_end(const std::map<int, std::vector<std::pair<int, int>>>& occ, int label,
                              std::pair<int, int> here) {
  const auto& v = occ.at(label);
  return v[0] == here ? v[1] : v[0];
}

// Direction of the over strand at each crossing: true when it enters at
// slot 1 and leaves at slot 3.  Arcs are oriented by the under strands and
// propagated along components; components that only pass over fall back to
// increasing label order.
std::vector<bool> over_enters_at_1(const PDCode& pd) {
  auto occ = occurrences(pd);
  int n = pd.size();
  // head[label] = (crossing, slot) where the arc ends, once known.
  std::map<int, std::pair<int, int>> head;
  for (int c = 0; c < n; ++c) head[pd.crossings[c][0]] = {c, 0};
  std::vector<int> dir(n, 0);  // +1: enters at 1, -1: enters at 3
  bool changed = true;
  auto settle = [&]() {
    changed = true;
    while (changed) {
      changed = false;
      for (int c = 0; c < n; ++c) {
        if (dir[c] != 0) continue;
        int a1 = pd.crossings[c][1], a3 = pd.crossings[c][3];
        auto known_into = [&](int label, int slot) {
          auto it = head.find(label);
          return it != head.end() && it->second == std::make_pair(c, slot);
        };
        auto known_out_elsewhere = [&](int label, int slot) {
          auto it = head.find(label);
          return it != head.end() && it->second != std::make_pair(c, slot);
        };
        if (known_into(a1, 1) || known_out_elsewhere(a3, 3)) dir[c] = 1;
        if (known_into(a3, 3) || known_out_elsewhere(a1, 1)) dir[c] = -1;
        if (a1 == a3) dir[c] = dir[c] == 0 ? 1 : dir[c];
        if (dir[c] == 0) continue;
        changed = true;
        int in_slot = dir[c] > 0 ? 1 : 3, out_slot = dir[c] > 0 ? 3 : 1;
        head[pd.crossings[c][in_slot]] = {c, in_slot};
        int out = pd.crossings[c][out_slot];
        if (!head.count(out)) head[out] = other_end(occ, out, {c, out_slot});
      }
      // Under strands: the arc leaving at slot 2 ends at its other occurrence.
      for (int c = 0; c < n; ++c) {
        int out = pd.crossings[c][2];
        if (!head.count(out)) {
          head[out] = other_end(occ, out, {c, 2});
          changed = true;
        }
      }
    }
  };
  settle();
  for (int c = 0; c < n; ++c) {
    if (dir[c] != 0) continue;
    int a1 = pd.crossings[c][1], a3 = pd.crossings[c][3];
    bool enters_1 = (a3 == a1 + 1) || (a1 > a3 + 1);
    dir[c] = enters_1 ? 1 : -1;
    int in_slot = enters_1 ? 1 : 3, out_slot = enters_1 ? 3 : 1;
    head[pd.crossings[c][in_slot]] = {c, in_slot};
    int out = pd.crossings[c][out_slot];
    if (!head.count(out)) head[out] = other_end(occ, out, {c, out_slot});
    settle();
  }
  std::vector<bool> out(n);
  for (int c = 0; c < n; ++c) out[c] = dir[c] > 0;
  return out;
}

}  // namespace

PDCode PDCode::parse(const std::string& text) {
  std::string clean;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) clean += line.substr(0, line.find('#')) + "\n";
  static const std::regex item(R"(X\s*[\[\(]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\]\)])");
  PDCode pd;
  std::string rest;
  auto begin = std::sregex_iterator(clean.begin(), clean.end(), item);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    rest += clean.substr(last, it->position() - last);
    last = it->position() + it->length();
    std::array<int, 4> x{};
    for (int k = 0; k < 4; ++k) x[k] = std::stoi((*it)[k + 1]);
    pd.crossings.push_back(x);
  }
  rest += clean.substr(last);
  for (char ch : rest)
    require(std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == ';',
            std::string("PD parse error: unexpected character '") + ch + "' near item " +
                std::to_string(pd.crossings.size() + 1));
  std::map<int, int> count;
  for (const auto& x : pd.crossings)
    for (int a : x) ++count[a];
  for (auto [label, k] : count)
    require(k == 2, "PD parse error: arc " + std::to_string(label) + " occurs " + std::to_string(k) +
                        " times (expected exactly 2)");
  return pd;
}

std::string PDCode::str() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const auto& x = crossings[c];
    out << (c ? " " : "") << "X[" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "]";
  }
  return out.str();
}

int PDCode::components() const {
  if (crossings.empty()) return 1;
  UnionFind uf;
  for (const auto& x : crossings) {
    uf.unite(x[0], x[2]);
    uf.unite(x[1], x[3]);
  }
  std::set<int> roots;
  for (const auto& x : crossings)
    for (int a : x) roots.insert(uf.find(a));
  return static_cast<int>(roots.size());
}

PDCode mirror(const PDCode& pd) {
  auto enters1 = over_enters_at_1(pd);
  PDCode out;
  for (int c = 0; c < pd.size(); ++c) {
    const auto& x = pd.crossings[c];
    // The old over strand becomes the under strand; rotate so that its
    // incoming arc comes first, keeping counterclockwise order.
    if (enters1[c])
      out.crossings.push_back({x[1], x[2], x[3], x[0]});
    else
      out.crossings.push_back({x[3], x[0], x[1], x[2]});
  }
  return out;
}

DiagramData color_and_white_graph(const PDCode& pd) {
  DiagramData out;
  ColoredDiagram& d = out.diagram;
  GoeritzData& gd = out.goeritz;
  d.pd = pd;
  int n = pd.size();

  if (n == 0) {
    d.faces = {Face{{}, true}, Face{{}, false}};
    d.alternating = true;
    gd.white_graph = Multigraph(1);
    gd.white_faces = {0};
    gd.black_graph = Multigraph(1);
    gd.black_faces = {1};
    gd.goeritz = GramLattice(IntMatrix{});
    return out;
  }

  auto occ = occurrences(pd);
  // Trace faces: the corner after (c, k) is the other occurrence of the arc
  // in slot k + 1, read at that crossing.
  d.corner_face.assign(4 * n, -1);
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) {
      if (d.corner_face[4 * c + k] >= 0) continue;
      Face f;
      int id = static_cast<int>(d.faces.size());
      std::pair<int, int> cur{c, k};
      while (d.corner_face[4 * cur.first + cur.second] < 0) {
        d.corner_face[4 * cur.first + cur.second] = id;
        f.corners.push_back(cur);
        int slot = (cur.second + 1) % 4;
        cur = other_end(occ, pd.crossings[cur.first][slot], {cur.first, slot});
      }
      ensure(cur == std::make_pair(c, k), "face tracing did not close up");
      d.faces.push_back(f);
    }
  require(static_cast<int>(d.faces.size()) == n + 2,
          "diagram is not connected (" + std::to_string(d.faces.size()) + " faces for " + std::to_string(n) +
              " crossings)");

  // Chessboard colouring: corners k and k+1 of a crossing lie on opposite
  // sides of an arc.  Colour 0 is the class containing corner (0, 0).
  int nf = static_cast<int>(d.faces.size());
  std::vector<int> colour(nf, -1);
  colour[d.corner_face[0]] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < n; ++c)
      for (int k = 0; k < 4; ++k) {
        int a = d.corner_face[4 * c + k], b = d.corner_face[4 * c + (k + 1) % 4];
        if (colour[a] >= 0 && colour[b] < 0) {
          colour[b] = 1 - colour[a];
          changed = true;
        } else if (colour[b] >= 0 && colour[a] < 0) {
          colour[a] = 1 - colour[b];
          changed = true;
        } else if (colour[a] >= 0) {
          ensure(colour[a] != colour[b], "diagram faces are not checkerboard colourable");
        }
      }
  }

  // Incidence for each choice of white colour.
  auto incidences = [&](int white) {
    std::vector<int> mu(n);
    for (int c = 0; c < n; ++c) {
      bool neg_corner_white = colour[d.corner_face[4 * c + kNegativeWhiteCorner]] == white;
      mu[c] = neg_corner_white ? -1 : 1;
    }
    return mu;
  };
  auto mu0 = incidences(0), mu1 = incidences(1);
  int neg0 = static_cast<int>(std::count(mu0.begin(), mu0.end(), -1));
  int neg1 = static_cast<int>(std::count(mu1.begin(), mu1.end(), -1));
  int white = neg1 > neg0 ? 1 : 0;
  d.mu = white == 0 ? mu0 : mu1;
  d.alternating = std::all_of(d.mu.begin(), d.mu.end(), [](int m) { return m == -1; });
  for (int f = 0; f < nf; ++f) d.faces[f].white = colour[f] == white;

  auto enters1 = over_enters_at_1(pd);
  d.sign.resize(n);
  for (int c = 0; c < n; ++c) d.sign[c] = enters1[c] ? -1 : 1;

  // Chessboard graphs: a crossing joins the faces at its opposite corners.
  std::vector<int> index(nf, -1);
  for (int f = 0; f < nf; ++f) {
    auto& list = d.faces[f].white ? gd.white_faces : gd.black_faces;
    index[f] = static_cast<int>(list.size());
    list.push_back(f);
  }
  gd.white_graph = Multigraph(static_cast<int>(gd.white_faces.size()));
  gd.black_graph = Multigraph(static_cast<int>(gd.black_faces.size()));
  for (int c = 0; c < n; ++c) {
    int wa = -1, wb = -1, ba = -1, bb = -1;
    for (int k = 0; k < 2; ++k) {
      int fa = d.corner_face[4 * c + k], fb = d.corner_face[4 * c + k + 2];
      if (d.faces[fa].white) {
        wa = index[fa];
        wb = index[fb];
      } else {
        ba = index[fa];
        bb = index[fb];
      }
    }
    gd.white_graph.add_edge(wa, wb);
    gd.edge_crossing.push_back(c);
    gd.black_graph.add_edge(ba, bb);
    gd.black_edge_crossing.push_back(c);
  }

  // Goeritz matrix on the white vertices minus the one of largest degree.
  int r1 = gd.white_graph.n;
  IntMatrix full(r1, IntVector(r1, 0));
  for (std::size_t e = 0; e < gd.white_graph.edges.size(); ++e) {
    auto [a, b] = gd.white_graph.edges[e];
    if (a == b) continue;
    int m = d.mu[gd.edge_crossing[e]];
    full[a][b] += m;
    full[b][a] += m;
    full[a][a] -= m;
    full[b][b] -= m;
  }
  gd.dropped = 0;
  for (int v = 1; v < r1; ++v)
    if (gd.white_graph.degree(v) > gd.white_graph.degree(gd.dropped)) gd.dropped = v;
  IntMatrix g;
  for (int i = 0; i < r1; ++i) {
    if (i == gd.dropped) continue;
    IntVector row;
    for (int j = 0; j < r1; ++j)
      if (j != gd.dropped) row.push_back(full[i][j]);
    g.push_back(row);
  }
  gd.goeritz = GramLattice(g);

  for (int c = 0; c < n; ++c) {
    if (d.sign[c] > 0) ++gd.positive;
    else ++gd.negative;
    if (d.sign[c] > 0 && d.mu[c] == -1) ++gd.n_plus;
    if (d.sign[c] < 0 && d.mu[c] == 1) ++gd.n_minus;
  }
  return out;
}

int signature(const DiagramData& d) {
  const auto& g = d.goeritz;
  return signature(g.goeritz.gram) + g.n_minus - g.n_plus;
}

std::int64_t determinant(const DiagramData& d) {
  std::int64_t det = std::llabs(determinant(d.goeritz.goeritz.gram));
  if (d.diagram.alternating && is_connected(d.goeritz.white_graph)) {
    Multigraph simple = d.goeritz.white_graph;
    std::int64_t trees = spanning_tree_count(simple);
    ensure(trees == det, "spanning-tree count differs from |det Goeritz| on an alternating diagram");
  }
  return det;
}

bool is_reduced(const DiagramData& d) {
  for (const Multigraph* g : {&d.goeritz.white_graph, &d.goeritz.black_graph})
    if (g->has_self_loop() || has_cut_edge(*g)) return false;
  return true;
}

namespace {

// Counterclockwise rotation system of a planar multigraph: darts around each
// vertex as (edge, side) with side 0 at edges[e].first.
std::vector<std::vector<std::pair<int, int>>> rotation_system(const Multigraph& g) {
  using namespace boost;
  using Graph = adjacency_list<vecS, vecS, undirectedS, no_property, property<edge_index_t, int>>;
  Graph h(g.n);
  std::map<std::pair<int, int>, std::vector<int>> classes;
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto [a, b] = g.edges[e];
    require(a != b, "planar graph has a self-loop");
    classes[{std::min(a, b), std::max(a, b)}].push_back(e);
  }
  int k = 0;
  for (auto& [key, list] : classes) {
    auto ed = add_edge(key.first, key.second, h).first;
    put(edge_index, h, ed, k++);
  }
  using Edge = graph_traits<Graph>::edge_descriptor;
  std::vector<std::vector<Edge>> emb(num_vertices(h));
  bool planar = boyer_myrvold_planarity_test(boyer_myrvold_params::graph = h,
                                             boyer_myrvold_params::embedding = &emb[0]);
  require(planar, "graph is not planar");
  std::vector<std::vector<std::pair<int, int>>> rot(g.n);
  for (int v = 0; v < g.n; ++v)
    for (const Edge& ed : emb[v]) {
      int a = static_cast<int>(source(ed, h)), b = static_cast<int>(target(ed, h));
      int u = a == v ? b : a;
      auto list = classes.at({std::min(u, v), std::max(u, v)});
      // Parallel edges are nested: one order at the smaller endpoint and the
      // reverse at the other.
      if (v > u) std::reverse(list.begin(), list.end());
      for (int e : list) rot[v].emplace_back(e, g.edges[e].first == v ? 0 : 1);
    }
  return rot;
}

}  // namespace

PDCode pd_from_planar_graph(const Multigraph& g) {
  require(is_connected(g), "graph must be connected");
  int ne = static_cast<int>(g.edges.size());
  if (ne == 0) return PDCode{};
  auto rot = rotation_system(g);
  // Position of each dart in its rotation, and corner ids: corner (v, i) sits
  // between darts i and i+1 at v.
  std::vector<std::array<std::pair<int, int>, 2>> pos(ne);
  std::vector<int> corner_base(g.n, 0);
  int corners = 0;
  for (int v = 0; v < g.n; ++v) {
    corner_base[v] = corners;
    corners += static_cast<int>(rot[v].size());
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
      auto [e, side] = rot[v][i];
      pos[e][side] = {v, i};
    }
  }
  auto corner = [&](int v, int i) {
    int d = static_cast<int>(rot[v].size());
    return corner_base[v] + ((i % d) + d) % d;
  };
  // Arms of the crossing on edge e, counterclockwise: NE, NW, SW, SE.
  // Strands: NW-SE passes under, NE-SW over.
  enum { NE, NW, SW, SE };
  std::vector<std::array<int, 4>> arm(ne);
  for (int e = 0; e < ne; ++e) {
    auto [u, iu] = pos[e][0];
    auto [v, iv] = pos[e][1];
    arm[e][NW] = corner(u, iu);
    arm[e][SW] = corner(u, iu - 1);
    arm[e][SE] = corner(v, iv);
    arm[e][NE] = corner(v, iv - 1);
  }
  // Where each medial arc (corner) attaches: two (edge, arm) pairs.
  std::vector<std::vector<std::pair<int, int>>> attach(corners);
  for (int e = 0; e < ne; ++e)
    for (int a = 0; a < 4; ++a) attach[arm[e][a]].emplace_back(e, a);
  for (const auto& at : attach) ensure(at.size() == 2, "medial arc does not have two ends");

  auto opposite = [](int a) { return (a + 2) % 4; };
  std::vector<int> label(corners, 0);
  std::vector<int> under_entry(ne, -1);
  std::vector<std::array<bool, 4>> used(ne, {false, false, false, false});
  int next_label = 1;
  for (int e0 = 0; e0 < ne; ++e0)
    for (int a0 : {NW, NE}) {
      if (used[e0][a0]) continue;
      // Walk a component entering e0 through arm a0.
      int e = e0, a = a0;
      while (!used[e][a]) {
        used[e][a] = true;
        if (a == NW || a == SE) under_entry[e] = a;
        int out = opposite(a);
        used[e][out] = true;
        int arc = arm[e][out];
        label[arc] = next_label++;
        auto ends = attach[arc];
        auto nxt = ends[0] == std::make_pair(e, out) ? ends[1] : ends[0];
        e = nxt.first;
        a = nxt.second;
      }
    }
  PDCode pd;
  for (int e = 0; e < ne; ++e) {
    auto L = [&](int a) { return label[arm[e][a]]; };
    if (under_entry[e] == NW)
      pd.crossings.push_back({L(NW), L(SW), L(SE), L(NE)});
    else
      pd.crossings.push_back({L(SE), L(NE), L(NW), L(SW)});
  }
  return pd;
}

std::optional<TangleSlope> tangle_slope_detect(const Multigraph& white, const std::vector<int>& chain,
                                         const std::vector<int>& edges) {
  require(chain.size() >= 2, "tangle chain needs at least v_0 and v_{l+1}");
  std::set<int> members(chain.begin(), chain.end());
  require(members.size() == chain.size(), "tangle chain repeats a region");
  for (int v : chain) require(v >= 0 && v < white.n, "tangle region out of range");
  std::vector<int> inside = edges;
  if (inside.empty()) {
    for (int e = 0; e < static_cast<int>(white.edges.size()); ++e)
      if (members.count(white.edges[e].first) && members.count(white.edges[e].second)) inside.push_back(e);
  }
  int l = static_cast<int>(chain.size()) - 2;
  std::map<int, int> pos;
  for (int i = 0; i < static_cast<int>(chain.size()); ++i) pos[chain[i]] = i;
  std::vector<int> between(l + 1, 0);  // edges v_i - v_{i+1} for i < l
  std::vector<std::int64_t> b(l + 1, 0);
  for (int e : inside) {
    require(e >= 0 && e < static_cast<int>(white.edges.size()), "tangle edge out of range");
    auto [x, y] = white.edges[e];
    require(members.count(x) && members.count(y), "tangle edge leaves the chosen regions");
    if (x == y) return std::nullopt;
    int i = pos[x], j = pos[y];
    if (i > j) std::swap(i, j);
    if (j == l + 1) {
      ++b[i];
    } else if (j == i + 1) {
      ++between[i];
      ++b[i];
      ++b[j];
    } else {
      return std::nullopt;
    }
  }
  for (int i = 0; i < l; ++i)
    if (between[i] != 1) return std::nullopt;
  if (l == 0 && b[0] == 0) return TangleSlope{1, 0};
  try {
    Slope qp = neg_cf_eval(b);  // q/p
    if (qp.p == 0) return TangleSlope{1, 0};
    return TangleSlope{qp.q, qp.p};
  } catch (const InputError&) {
    return std::nullopt;
  }
}

Slope montesinos_slope(std::int64_t m, std::int64_t r, std::int64_t s) {
  require(m >= 0 && r >= 0 && s >= 0 && (r > 0 || s > 0), "montesinos_slope: need m >= 0 and r/s >= 0");
  require(std::gcd(r, s) == 1, "montesinos_slope: r and s must be coprime");
  std::int64_t q = r + s;
  return Slope(q * m + r, q);
}

}  // namespace altsurg
