#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "altsurg/intlat.hpp"

namespace altsurg {

// Finite undirected multigraph; every edge is stored once, so parallel edges
// appear as repeated pairs.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  Multigraph() = default;
  explicit Multigraph(int vertices) : n(vertices) {}

  int add_edge(int u, int v, int multiplicity = 1);
  int multiplicity(int u, int v) const;
  int degree(int v) const;
  bool has_self_loop() const;
  std::vector<std::vector<int>> adjacency() const;  // neighbour list with repeats

  // Text format: first line the vertex count, then "u v multiplicity" lines.
  static Multigraph parse(const std::string& text);
  std::string str() const;
};

bool is_connected(const Multigraph& g);
// Connectivity of the subgraph induced by the vertices with in[v] set.
// The empty set counts as connected.
bool induces_connected(const Multigraph& g, const std::vector<bool>& in);

// Laplacian: d(v) on the diagonal, -e(u,v) off it.  Self-loops are ignored.
IntMatrix laplacian(const Multigraph& g);

// Gram matrix of Lambda(G) on the basis V \ {dropped}.
GramLattice graph_lattice_gram(const Multigraph& g, int dropped);

// Coordinates of the element sum_v c_v v in the basis V \ {dropped}.
IntVector to_gram_coords(const IntVector& coeffs, int dropped);

// Representative of sum_v c_v v modulo [V] with minimum coefficient 0.
IntVector normalize_element(IntVector coeffs);

std::int64_t spanning_tree_count(const Multigraph& g);

bool is_two_connected(const Multigraph& g);
// Planarity of the underlying simple graph (Boyer-Myrvold).
bool is_planar(const Multigraph& g);
std::vector<int> cut_edges(const Multigraph& g);  // indices into g.edges
bool has_cut_edge(const Multigraph& g);

// [R] is irreducible iff R and V \ R both induce connected subgraphs.
bool is_irreducible_sum(const Multigraph& g, const std::vector<bool>& region);

// The decomposition v = x + y with x . y = -1, x = v + [R], y = v + [S],
// where R and S are the sides of a cut edge of G \ {v}.
struct VertexSplit {
  std::vector<int> r, s;  // sorted vertex lists
  int u1 = -1;            // endpoint of the cut edge in R
  int u2 = -1;            // endpoint of the cut edge in S
  IntVector x, y;         // as coefficient vectors over V
};

std::optional<VertexSplit> split_vertex(const Multigraph& g, int v);

}  // namespace altsurg
