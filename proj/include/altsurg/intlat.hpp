#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace altsurg {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

// Default node budget shared by enumeration and isometry search.
inline constexpr std::int64_t kDefaultBudget = 20'000'000;

std::int64_t dot(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(std::int64_t c, const IntVector& a);
IntVector neg(const IntVector& a);
bool is_zero(const IntVector& a);
IntMatrix gram_of(const std::vector<IntVector>& vectors);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// A lattice presented by a symmetric integer Gram matrix.
struct GramLattice {
  IntMatrix gram;

  GramLattice() = default;
  explicit GramLattice(IntMatrix g) : gram(std::move(g)) {}

  int rank() const { return static_cast<int>(gram.size()); }
  bool is_symmetric() const;
  // x^T G x for a coordinate vector x.
  std::int64_t norm(const IntVector& x) const;
  std::int64_t pair(const IntVector& x, const IntVector& y) const;

  // Text format: first line the rank r, then r rows of r integers.
  static GramLattice parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const GramLattice&, const GramLattice&) = default;
};

// Rows of `matrix` are the coordinates, in the basis of the target lattice,
// of the images of the source basis vectors.
struct Isometry {
  IntMatrix matrix;
};

std::int64_t determinant(const IntMatrix& m);
bool is_positive_definite(const GramLattice& g);
std::int64_t discriminant(const GramLattice& g);

// Signature (#positive - #negative eigenvalues) of a symmetric matrix.
int signature(const IntMatrix& m);

// Canonical (row Hermite normal form) basis of the integer kernel
// {x in Z^N : x . v = 0 for all v in vectors}.
std::vector<IntVector> orthogonal_complement(const std::vector<IntVector>& vectors, int ambient);

// Row Hermite normal form of the lattice spanned by the rows.
std::vector<IntVector> hermite_rows(std::vector<IntVector> rows);

// Integer coefficients c with sum c_i basis_i = z, or nothing when z is not
// in the integer span.  The basis must be linearly independent.
std::optional<IntVector> integer_coordinates(const std::vector<IntVector>& basis, const IntVector& z);

struct EnumOptions {
  std::int64_t budget = kDefaultBudget;
  bool up_to_sign = false;  // keep only one of each pair +-x
};

// All coordinate vectors x with x^T G x <= bound (zero included), in a
// deterministic order.  Throws BudgetExceeded past the node budget.
std::vector<IntVector> vectors_of_norm_at_most(const GramLattice& g, std::int64_t bound,
                                               const EnumOptions& opts = {});

// A Gram-preserving map from the basis of g1 into the lattice of g2 that is
// onto, or nothing if the lattices are not isometric.  Throws BudgetExceeded
// when the search is cut short.
std::optional<Isometry> find_isometry(const GramLattice& g1, const GramLattice& g2,
                                      std::int64_t budget = kDefaultBudget);

// x is irreducible when it is not y + z with y, z nonzero and y . z >= 0;
// equivalently +-x are the only shortest vectors of the coset x + 2L.
bool is_irreducible(const GramLattice& g, const IntVector& x, std::int64_t budget = kDefaultBudget);

// All irreducible vectors (both signs).  There are at most 2(2^r - 1).
std::vector<IntVector> irreducible_vectors(const GramLattice& g, std::int64_t budget = kDefaultBudget);

// True when the lattice splits as an orthogonal sum of two nonzero pieces,
// decided by connectivity of the irreducible vectors under non-orthogonality.
bool is_decomposable(const GramLattice& g, std::int64_t budget = kDefaultBudget);

}  // namespace altsurg
