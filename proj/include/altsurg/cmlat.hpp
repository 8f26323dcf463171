#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "altsurg/intlat.hpp"
#include "altsurg/ratcf.hpp"

namespace altsurg {

using Coeffs = std::vector<std::int64_t>;

// Ambient Z^N layout: for non-integer slopes e_0..e_s occupy indices 0..s
// and f_1..f_t follow; for integer slopes only f_1..f_t are present.
struct ChangemakerLattice {
  Slope slope;
  NegCF cf;
  Coeffs sigma;   // sigma_1..sigma_t, nondecreasing
  Coeffs stable;  // entries of sigma that are >= 2
  int s = -1;     // index of the last e (s = -1 when the slope is an integer)
  int t = 0;
  int N = 0;
  std::vector<IntVector> w;      // w_0..w_l
  std::vector<IntVector> mu;     // mu_0..mu_m (non-integer slopes)
  std::vector<IntVector> nu;     // nu_1..nu_t, or nu_2..nu_t for integer slopes
  std::vector<IntVector> basis;  // standard basis: nu's then mu_1..mu_m
  GramLattice gram;

  bool integral() const { return slope.q == 1; }
  int e(int i) const { return i; }
  int f(int i) const { return s + i; }  // f_i, 1 <= i <= t
  int rank() const { return static_cast<int>(basis.size()); }
  int m() const { return mu.empty() ? 0 : static_cast<int>(mu.size()) - 1; }
  // Ambient coordinates of a vector given in standard-basis coordinates.
  IntVector embed(const IntVector& coords) const;
  // True iff x is orthogonal to every w_i.
  bool contains(const IntVector& x) const;
};

// sigma_1 = 1 and sigma_i <= 1 + sigma_1 + ... + sigma_{i-1} after sorting.
// The empty sequence is rejected by convention.
bool changemaker_check(Coeffs sigma);

// Pads the stable coefficients with ones so that ||w_0|| = ceil(p/q).
Coeffs coeffs_from_stable(const Slope& slope, Coeffs stable);

ChangemakerLattice cm_build(const Slope& slope, const Coeffs& stable);
ChangemakerLattice cm_build_sigma(const Slope& slope, Coeffs sigma);

struct Tightness {
  std::vector<int> tight_indices;  // k > 1 with sigma_k = 1 + sigma_1 + ... + sigma_{k-1}
  bool tight = false;
};
Tightness tightness(const Coeffs& sigma);

// A subset of indices (1-based, within [1, max_index]) whose coefficients sum
// to target, chosen greedily from the largest index down; empty optional if
// the greedy choice fails.
std::optional<std::vector<int>> greedy_subset(const Coeffs& sigma, std::int64_t target, int max_index);

// The w_1..w_l and mu_0..mu_m of a non-integer slope, written over
// e_0..e_s only; they do not depend on the changemaker coefficients.
struct FractionalPart {
  int s = 0;
  std::vector<int> alpha;        // alpha_0..alpha_l
  std::vector<IntVector> w_tail;  // w_1..w_l
  std::vector<IntVector> mu;      // mu_0..mu_m
  std::vector<std::int64_t> mu_norms() const;
};
FractionalPart fractional_part(const Slope& slope);

// Gram matrix of mu_0..mu_m.
GramLattice fractional_gram(const ChangemakerLattice& lat);

// 2g = sum rho_i (rho_i - 1).
std::int64_t genus_from_stable(const Coeffs& stable);

}  // namespace altsurg
