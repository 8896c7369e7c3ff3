#pragma once

#include <span>

#include "taylorhess/algebra/rational.hpp"
#include "taylorhess/pade/symbolic_matrix.hpp"

namespace taylorhess {

/// Leibniz expansion of det(P) as a polynomial in the listed coordinates
/// (variable i of the result is vars[i]). Only for small matrices (k <= 8);
/// larger input throws UsageError.
Polynomial<RationalField> expand_determinant(const SymbolicMatrix& p, std::span<const Exponent> vars);

}  // namespace taylorhess
