#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altsurg/cmlat.hpp"
#include "altsurg/graphlat.hpp"
#include "altsurg/intlat.hpp"
#include "altsurg/knotdiag.hpp"
#include "altsurg/ratcf.hpp"

namespace altsurg {

// Changemaker tuples sigma (nondecreasing, Brown condition) with
// sum sigma_i^2 = ceil(p/q) - 1 for q > 1 or p for q = 1, built into
// lattices and ordered lexicographically by their stable coefficients.
// rank >= 0 keeps only lattices of that rank.
std::vector<ChangemakerLattice> candidate_cm_lattices(const Slope& slope, int rank = -1);

// Vertices of a white graph realised as vectors of a changemaker lattice.
// The white graph is implied by the vectors: distinct vertices x, y share
// -x.y edges, and the vectors sum to zero.
struct EmbeddingCertificate {
  ChangemakerLattice lattice;
  std::vector<IntVector> coords;  // one per vertex
  std::vector<int> ids;           // stable labels used by move traces
  std::vector<int> regions;       // white region of the source diagram, or -1
  int next_id = 0;

  // Source diagram data (empty when built from a bare Gram matrix).
  Multigraph source_white;
  std::vector<int> source_edge_crossing;
  bool mirrored = false;

  int size() const { return static_cast<int>(coords.size()); }
  Multigraph white() const;
  int index_of_id(int id) const;
  int index_of(const IntVector& x) const;  // -1 if x is not a vertex
  void negate();
};

// Every violated certificate invariant, empty when the certificate is valid:
// vectors orthogonal to every w_i, summing to zero, pairwise pairings <= 0,
// connected 2-connected white graph, spanning the lattice (det = p), and
// agreement with the source white graph where regions are known.
std::vector<std::string> certificate_problems(const EmbeddingCertificate& cert);
void validate_certificate(const EmbeddingCertificate& cert);

// First candidate (in candidate order) isometric to the Goeritz lattice; the
// vertex vectors are the images of the basis plus minus their sum.
std::optional<EmbeddingCertificate> recognize(const GramLattice& goeritz, const Slope& slope,
                                              std::int64_t budget = kDefaultBudget);
// Same, keeping the diagram's white-graph data.
std::optional<EmbeddingCertificate> recognize_diagram(const DiagramData& d, const Slope& slope,
                                                      std::int64_t budget = kDefaultBudget);

struct Markers {
  int v = -1;        // vertex index with v.e_0 = +1
  int w = -1;        // vertex index with w.e_0 = -1
  int marked = 0;    // edges between v and w
  std::vector<int> crossings;  // their crossing ids, when the regions are original
};
Markers marker_vertices(const EmbeddingCertificate& cert);

enum class MoveKind { FlypeSplit, FlypeTwist, Untongue, UntwirlA2, UntwirlB };
std::string to_string(MoveKind kind);

struct Move {
  MoveKind kind;
  std::vector<int> removed;  // vertex ids
  std::vector<int> added;
  std::string note;
};
using MoveTrace = std::vector<Move>;

// Lemma-level flype: vertex v = x + y with x.y = -1; the unique u1, u2 != v
// with u1.x > 0 and u2.y > 0 are merged while v is split.
Move flype_split(EmbeddingCertificate& cert, int v, const IntVector& x, const IntVector& y);
// Flype rotating a component G_1 of the graph minus the cut set {v, w}
// (with an edge between v and w): z -> -z on G_1, v -> v + [G_1],
// w -> w + [G_1].
Move flype_twist(EmbeddingCertificate& cert, int v, int w, const std::vector<int>& component);

struct FractionalTangle {
  EmbeddingCertificate cert;      // after flypes making mu_1..mu_m vertices
  MoveTrace trace;
  int v = -1;
  int w = -1;
  std::vector<int> mu_vertices;   // vertex indices of mu_1..mu_m
  std::vector<int> tangle_edges;  // indices into cert.white().edges
  TangleSlope slope;
  TangleSlope expected;           // (q - r)/r
  EmbeddingCertificate collapsed;  // half-integer certificate after replacement
};
FractionalTangle fractional_tangle(const EmbeddingCertificate& cert);

enum class Situation { A1, A2, B };
std::string to_string(Situation s);

struct StandardForm {
  int v = -1, w = -1;
  std::vector<int> adjacent;  // u1, u2 (situation A) or u (situation B)
  Situation situation = Situation::A1;
};

// Flypes to standard form: v = -f_1 + e_0 + e_1, the chain v_2..v_k, and
// w (tight) or u_1 (slack) in closed form.  Single marked crossing only.
MoveTrace normalize_to_standard_form(EmbeddingCertificate& cert);
StandardForm classify_situation(const EmbeddingCertificate& cert);
// Untongue (A1) or untwirl (A2, B): a half-integer certificate of smaller
// rank in which the new marker pair again carries a marked crossing.
EmbeddingCertificate descend(const EmbeddingCertificate& cert, const StandardForm& form, Move* move = nullptr);

struct Reduction {
  MoveTrace trace;
  std::vector<int> ranks;          // rank at the start of each stage
  std::vector<int> marked_counts;  // marked crossings at each stage
  std::vector<EmbeddingCertificate> history;  // certificate at the start of each stage
  EmbeddingCertificate final_cert;  // multi-marked: the clasp stage
  int stages() const { return static_cast<int>(ranks.size()); }
};
Reduction reduce_to_clasp(EmbeddingCertificate cert);

// The stage the reduction stops at: with the marker edges removed the white
// graph is a path from v to w, and det = 1 after changing a marked crossing.
bool is_clasp_stage(const EmbeddingCertificate& cert);

// Half-integer identification of a vertex set in Z^{2+t} = <e_0, e_1, f..>
// whose orthogonal complement is spanned by e_1 - e_0 and some
// e_0 + sum c_j f_j: signs and order of the f's are normalised so that the
// c_j form a changemaker tuple.
EmbeddingCertificate identify_half_integer(std::vector<IntVector> coords, const std::vector<int>& ids,
                                           const std::vector<int>& regions, int next_id);

}  // namespace altsurg
