#pragma once

// Independent reference implementations used by the unit and acceptance
// tests.  Nothing here calls the library routine it is meant to check.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "altsurg/graphlat.hpp"
#include "altsurg/ratcf.hpp"
#include "altsurg/recognizer.hpp"

namespace oracle {

using altsurg::Multigraph;
using altsurg::Rational;

// d(L(p, q), i) by the recursion
//   d(L(p,q), i) = -1/4 + (2i + 1 - p - q)^2 / (4pq) - d(L(q, r), j),
// r = p mod q, j = i mod q, with d(L(1, 0), 0) = 0.
Rational lens_d(std::int64_t p, std::int64_t q, std::int64_t i);

// Every integer in [0, sum sigma] is a subset sum of sigma (2^t subsets).
bool subset_sums_cover(const std::vector<std::int64_t>& sigma);

// Plain breadth-first connectivity, optionally skipping one vertex or edge.
bool connected(const Multigraph& g, int skip_vertex = -1, int skip_edge = -1);
bool brute_has_cut_edge(const Multigraph& g);
bool brute_two_connected(const Multigraph& g);

// Spanning trees by deletion-contraction.
std::int64_t tree_count(const Multigraph& g);

// Symmetric Alexander coefficients a_0..a_g of T(r, s) from the semigroup
// <r, s>: Delta(t) = (1 - t) sum_{n in S} t^n, read off around t^g.
std::vector<std::int64_t> torus_alexander(std::int64_t r, std::int64_t s);

// V_0, V_1, ... by brute force over all a in [-B, B]^t:
// V_k = min { sum a_i(a_i+1)/2 : a . sigma = g - k }.
std::vector<std::int64_t> v_brute(const std::vector<std::int64_t>& sigma);

// Two-terminal series-parallel white graph of the 2-bridge knot with
// continued fraction [c_1, ..., c_n]; its spanning-tree count is the
// numerator of c_n + 1/(c_{n-1} + ... + 1/c_1).
Multigraph two_bridge_graph(const std::vector<int>& c);

// White graph of the pretzel-type Montesinos diagram 3,21,2.
Multigraph montesinos_3_21_2();

// Clasp white graph: a path v = 0, 1, ..., length = w plus two edges v-w.
Multigraph clasp_graph(int length);

// Random twist insertions: each step subdivides an edge (adds a vertex in
// series) or doubles an edge (adds a parallel edge).
Multigraph insert_twists(Multigraph g, int steps, std::mt19937_64& rng, int max_vertices);

// Certificates for knots with a marked crossing, grown from clasps.
struct GeneratedCertificate {
  Multigraph white;
  altsurg::EmbeddingCertificate cert;
};
std::vector<GeneratedCertificate> clasp_family(int count, int max_rank, std::uint64_t seed);

// All connected loopless multigraphs with n vertices (2 <= n <= max_n) and
// at most max_edges edges, one per isomorphism class.
std::vector<Multigraph> small_multigraphs(int max_n, int max_edges);

}  // namespace oracle
