#pragma once

#include <cstddef>

#include "taylorhess/algebra/prime_field.hpp"
#include "taylorhess/algebra/rational.hpp"
#include "taylorhess/detcalc/linalg.hpp"

namespace taylorhess {

/// Determinant over F_p. Throws UsageError for non-square input.
Fp det_modp(const Matrix<Fp>& m);

/// Exact determinant by fraction-free (Bareiss) elimination after clearing
/// the denominators of each row.
Rational det_exact(const Matrix<Rational>& m);

/// Fraction-free determinant of an integer matrix.
Integer det_bareiss(Matrix<Integer> a);

template <Field F>
std::size_t rank_at(const Matrix<typename F::Element>& m, const F& field) {
  return rank(m, field);
}

/// Entrywise reduction of a rational matrix.
Matrix<Fp> reduce(const Matrix<Rational>& m, const PrimeField& field);

}  // namespace taylorhess
