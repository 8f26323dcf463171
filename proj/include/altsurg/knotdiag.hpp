#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altsurg/graphlat.hpp"
#include "altsurg/intlat.hpp"
#include "altsurg/ratcf.hpp"

namespace altsurg {

// Planar diagram code.  Each crossing lists its four arc labels
// counterclockwise, starting from the incoming under-strand; the under
// strand runs from slot 0 to slot 2.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;

  // Accepts "X[a,b,c,d]" or "X(a,b,c,d)" items separated by whitespace or
  // commas; '#' starts a comment.  Validates that every label occurs twice.
  static PDCode parse(const std::string& text);
  std::string str() const;
  int size() const { return static_cast<int>(crossings.size()); }
  int components() const;
};

// The mirror image: every crossing switched.
PDCode mirror(const PDCode& pd);

struct Face {
  std::vector<std::pair<int, int>> corners;  // (crossing, k): between slots k and k+1
  bool white = false;
};

struct ColoredDiagram {
  PDCode pd;
  std::vector<Face> faces;
  std::vector<int> corner_face;  // face id of corner (c, k) at index 4c + k
  std::vector<int> mu;           // incidence number per crossing
  std::vector<int> sign;         // +1 / -1 per crossing from the orientation
  bool alternating = false;      // every incidence is -1 for the chosen colouring
};

struct GoeritzData {
  Multigraph white_graph;          // vertex i is white_faces[i]
  std::vector<int> white_faces;
  std::vector<int> edge_crossing;  // crossing id of each white-graph edge
  Multigraph black_graph;
  std::vector<int> black_faces;
  std::vector<int> black_edge_crossing;
  int dropped = 0;                 // white vertex left out of the Goeritz matrix
  GramLattice goeritz;
  int n_plus = 0;                  // positive crossings with incidence -1
  int n_minus = 0;                 // negative crossings with incidence +1
  int positive = 0;
  int negative = 0;
};

struct DiagramData {
  ColoredDiagram diagram;
  GoeritzData goeritz;
};

// Faces, chessboard colouring (chosen so that as many incidences as possible
// are -1, all of them for alternating diagrams), white graph and Goeritz
// matrix.  Throws for disconnected diagrams.
DiagramData color_and_white_graph(const PDCode& pd);

// Gordon-Litherland: sig(G) + n_- - n_+.
int signature(const DiagramData& d);
// |det G|; for alternating diagrams also checked against the spanning-tree
// count of the white graph.
std::int64_t determinant(const DiagramData& d);
// Neither chessboard graph has a self-loop or a cut edge.
bool is_reduced(const DiagramData& d);

// A reduced alternating diagram whose white graph (with incidence -1) is the
// given planar 2-connected multigraph: one crossing per edge of g.
PDCode pd_from_planar_graph(const Multigraph& g);

// Rational tangle detection in a white graph.  chain = v_0, ..., v_l, v_{l+1}
// with v_0 and v_{l+1} the regions meeting the disk boundary; edges are the
// white-graph edges inside the disk (empty: all edges induced by the chain).
// Returns the slope p/q with q/p = [b_0, ..., b_l]^- as a reduced pair
// (q = 0 for the crossingless tangle 1/0), or nothing if the chain
// hypothesis fails.
struct TangleSlope {
  std::int64_t p = 1;
  std::int64_t q = 0;
  std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
  friend bool operator==(const TangleSlope&, const TangleSlope&) = default;
};
std::optional<TangleSlope> tangle_slope_detect(const Multigraph& white, const std::vector<int>& chain,
                                         const std::vector<int>& edges = {});

// Surgery slope p/q for a rational tangle r/s replacing a crossing after m
// further twists: q = r + s, p = q m + r.
Slope montesinos_slope(std::int64_t m, std::int64_t r, std::int64_t s);

}  // namespace altsurg
