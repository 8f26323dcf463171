#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "altsurg/cmlat.hpp"
#include "altsurg/intlat.hpp"
#include "altsurg/ratcf.hpp"

namespace altsurg {

// Symmetric Alexander polynomial a_0 + sum_{i>=1} a_i (t^i + t^-i), stored
// as a_0..a_g with a_g != 0 (or just {1} for the trivial polynomial).
struct AlexPoly {
  std::vector<std::int64_t> a{1};

  // "a0 a1 ... ag" separated by spaces or commas.  Checks Delta(1) = 1.
  static AlexPoly parse(const std::string& text);
  static AlexPoly from(std::vector<std::int64_t> coeffs);
  int degree() const { return static_cast<int>(a.size()) - 1; }
  // Nonzero coefficients are +-1, alternate in sign and the top one is 1.
  bool lspace_shaped() const;
  std::string str() const;
  friend bool operator==(const AlexPoly&, const AlexPoly&) = default;
};

// t_i = sum_{j>=1} j a_{i+j} for 0 <= i <= g.
std::vector<std::int64_t> torsion_coeffs(const AlexPoly& p);
// Inverse of torsion_coeffs: a_j = t_{j-1} - 2 t_j + t_{j+1}, a_0 from Delta(1) = 1.
AlexPoly alexander_from_torsion(const std::vector<std::int64_t>& t);

// V_0, V_1, ... with implicit zeros past the stored prefix.
struct VSeq {
  std::vector<std::int64_t> v;

  static VSeq parse(const std::string& text);
  // V_k for any integer k, using V_{-k} = V_k + k.
  std::int64_t at(std::int64_t k) const;
  // Nonnegative, V_{k-1} - 1 <= V_k <= V_{k-1}, trailing zero reached.
  bool valid() const;
  // Smallest k with V_k = 0.
  std::int64_t nu_plus() const;
  std::string str() const;
  friend bool operator==(const VSeq& x, const VSeq& y);
};

struct StableStats {
  VSeq V;                      // V_0 .. V_g (V_g = 0)
  std::vector<std::int64_t> T;  // T_0 .. T_{V_0}
  std::int64_t genus = 0;
};

// Number of ones making (1, ..., 1, stable) a changemaker tuple.
int minimal_ones(Coeffs stable);

// V_k = min { sum a_i(a_i+1)/2 : a in Z^t, a . sigma = g - k } over the
// full sigma (stable coefficients padded with `ones` ones; -1 picks the
// minimal count), together with T_m = |{i >= 0 : 1 <= V_i <= m}|.
StableStats v_from_stable(Coeffs stable, int ones = -1, std::int64_t budget = kDefaultBudget);

// Stable coefficients (sorted ascending) determined by a V-sequence; throws
// InputError if no changemaker tuple produces V.
Coeffs recover_stable(const VSeq& V, std::int64_t budget = kDefaultBudget);

// Characteristic representatives for Spin^c structures on the linear
// plumbing of [a_0, ..., a_l]^-.
bool has_full_tank(const IntVector& c, const NegCF& cf);
bool is_left_full(const IntVector& c, const NegCF& cf);
bool in_M(const IntVector& c, const NegCF& cf);
bool in_C(const IntVector& c, const NegCF& cf);

struct SpincClass {
  IntVector c;          // representative in C
  std::int64_t label;   // index in Z/p under the affine identification
  Rational norm;        // c M^-1 c^T
  Rational d;           // (norm - l - 1) / 4
};

// All p elements of C sorted by label, with d-invariants of S^3_{p/q}(U).
std::vector<SpincClass> lens_d_invariants(const Slope& slope);
// Convenience: d(S^3_{p/q}(U), i) indexed by i.
std::vector<Rational> lens_d_by_label(const Slope& slope);

// Affine label of a characteristic vector in Z/p.
std::int64_t spinc_label(const IntVector& c, const NegCF& cf);

// d(S^3_{p/q}(K), i) = d(S^3_{p/q}(U), i) - 2 V_{min(floor(i/q), ceil((p-i)/q))}.
std::vector<Rational> surgery_d_invariants(const Slope& slope, const VSeq& V);
std::int64_t correction_index(const Slope& slope, std::int64_t i);

// D(s) for s in M: 2V_{(a_0-|c_0|-2)/2} if +-s is left-full with +-c_0 >= 0,
// otherwise 2V_{(a_0-|c_0|)/2}.
std::int64_t eval_correction(const IntVector& c, const NegCF& cf, const VSeq& V);

struct SlopeWindow {
  std::int64_t N = 0;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool contains(const Rational& x) const { return Rational(lo) <= x && x <= Rational(hi); }
};
// N = rho_1 + sum rho_i^2 with rho_1 the smallest stable coefficient.
SlopeWindow slope_window(Coeffs stable);
// |p/q| <= 4g + 3.
bool rasmussen_bound_ok(const Rational& slope, std::int64_t genus);

// Greene's threshold 2g + (1 + sqrt(24g + 1))/2, compared exactly.
struct GreeneBound {
  std::int64_t genus = 0;
  // True iff genus >= 1 and |x| lies strictly below the threshold.
  bool excludes(const Rational& x) const;
  std::string str() const;
};
GreeneBound greene_lower_bound(std::int64_t genus);

struct TorusData {
  std::int64_t r = 0;
  std::int64_t s = 0;
  AlexPoly alexander;
  std::int64_t genus = 0;
  std::int64_t unknotting = 0;
  Rational char_slope_threshold;
};
// T_{r,s} for coprime r, s >= 2 (either order).
TorusData torus_tools(std::int64_t r, std::int64_t s);

}  // namespace altsurg
