#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "taylorhess/algebra/monomial_order.hpp"
#include "taylorhess/params.hpp"
#include "taylorhess/pade/symbolic_matrix.hpp"

namespace taylorhess {

struct PadeShape {
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool square = false;
};

/// Rows = C(m+n,n) - C(d+n,n), cols = C(e+n,n). Throws UsageError for m <= d.
PadeShape pade_shape(const TaylorParams& params);

/// Basis orderings for the Padé matrix. Rows (image monomials) and columns
/// (domain monomials) each carry their own graded order.
struct PadeLayout {
  MonomialOrder rows{Direction::kDecreasing, Direction::kDecreasing};
  MonomialOrder cols{Direction::kIncreasing, Direction::kDecreasing};

  /// Degrees increasing on the domain, decreasing on the image, and each
  /// degree of both listed from x_1^k downwards.
  static PadeLayout standard() { return {}; }
  /// As standard, but domain monomials inside one degree run from x_n^k up.
  static PadeLayout reversed() {
    PadeLayout l;
    l.cols.within_degree = Direction::kIncreasing;
    return l;
  }

  friend bool operator==(const PadeLayout&, const PadeLayout&) = default;
};

/// Matrix of Q -> QT restricted to the monomials of degree d+1..m. Entry at
/// (rho, sigma) is c_{rho - sigma} when sigma <= rho, else zero. Column
/// sigma belongs to block j = m - |sigma| (multiplication by T_j).
SymbolicMatrix pade_matrix(const TaylorParams& params, const PadeLayout& layout = PadeLayout::standard());

/// P with its first column removed. Throws UsageError for single-column input.
SymbolicMatrix reduced_pade(const SymbolicMatrix& p);

/// Block indices present in P, largest first (the column order of the
/// standard layout).
std::vector<int> block_indices(const SymbolicMatrix& p);

/// The columns of block C_j. Throws UsageError if P has no such block.
SymbolicMatrix block_view(const SymbolicMatrix& p, int j);

/// Macaulay2 script rebuilding P over QQ with variables c_(...) for every
/// ambient coordinate, followed by a random-point determinant check when P is
/// square. Byte-stable for fixed input.
std::string export_m2(const SymbolicMatrix& p, const TaylorParams& params);

}  // namespace taylorhess
