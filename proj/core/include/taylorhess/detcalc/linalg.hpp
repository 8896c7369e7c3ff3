#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "taylorhess/algebra/field.hpp"
#include "taylorhess/detcalc/matrix.hpp"
#include "taylorhess/errors.hpp"

namespace taylorhess {

/// Determinant by Gaussian elimination, pivoting on the first nonzero entry
/// of each column. O(k^3) field operations.
template <Field F>
typename F::Element determinant(Matrix<typename F::Element> a, const F& field) {
  if (!a.is_square()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  auto det = field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && field.is_zero(a(piv, c))) ++piv;
    if (piv == n) return field.zero();
    if (piv != c) {
      a.swap_rows(piv, c);
      det = -det;
    }
    det = det * a(c, c);
    const auto inv = field.inv(a(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (field.is_zero(a(r, c))) continue;
      const typename F::Element factor = a(r, c) * inv;
      for (std::size_t k = c + 1; k < n; ++k) a(r, k) = a(r, k) - factor * a(c, k);
    }
  }
  return det;
}

/// Rank over the field by row reduction.
template <Field F>
std::size_t rank(Matrix<typename F::Element> a, const F& field) {
  std::size_t rk = 0;
  for (std::size_t c = 0; c < a.cols() && rk < a.rows(); ++c) {
    std::size_t piv = rk;
    while (piv < a.rows() && field.is_zero(a(piv, c))) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(piv, rk);
    const auto inv = field.inv(a(rk, c));
    for (std::size_t r = rk + 1; r < a.rows(); ++r) {
      if (field.is_zero(a(r, c))) continue;
      const typename F::Element factor = a(r, c) * inv;
      for (std::size_t k = c; k < a.cols(); ++k) a(r, k) = a(r, k) - factor * a(rk, k);
    }
    ++rk;
  }
  return rk;
}

template <Field F>
Matrix<typename F::Element> identity(std::size_t n, const F& field) {
  Matrix<typename F::Element> id(n, n, field.zero());
  for (std::size_t i = 0; i < n; ++i) id(i, i) = field.one();
  return id;
}

/// Gauss-Jordan inverse; nullopt when singular.
template <Field F>
std::optional<Matrix<typename F::Element>> inverse(Matrix<typename F::Element> a, const F& field) {
  if (!a.is_square()) throw UsageError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  auto inv = identity(n, field);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && field.is_zero(a(piv, c))) ++piv;
    if (piv == n) return std::nullopt;
    a.swap_rows(piv, c);
    inv.swap_rows(piv, c);
    const auto s = field.inv(a(c, c));
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) = a(c, k) * s;
      inv(c, k) = inv(c, k) * s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || field.is_zero(a(r, c))) continue;
      const auto factor = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) = a(r, k) - factor * a(c, k);
        inv(r, k) = inv(r, k) - factor * inv(c, k);
      }
    }
  }
  return inv;
}

/// The matrix with row `skip_r` and column `skip_c` removed.
template <class T>
Matrix<T> minor_matrix(const Matrix<T>& a, std::size_t skip_r, std::size_t skip_c) {
  Matrix<T> m(a.rows() - 1, a.cols() - 1, a(0, 0));
  for (std::size_t i = 0, mi = 0; i < a.rows(); ++i) {
    if (i == skip_r) continue;
    for (std::size_t j = 0, mj = 0; j < a.cols(); ++j) {
      if (j == skip_c) continue;
      m(mi, mj++) = a(i, j);
    }
    ++mi;
  }
  return m;
}

/// Adjugate: adj(A) A = A adj(A) = det(A) I, defined for singular A too.
/// Invertible input goes through det(A) A^{-1}; rank <= k-2 gives zero;
/// corank one falls back to explicit cofactors.
template <Field F>
Matrix<typename F::Element> adjugate(const Matrix<typename F::Element>& a, const F& field) {
  if (!a.is_square()) throw UsageError("adjugate of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return a;
  if (n == 1) return identity(1, field);
  if (auto inv = inverse(a, field)) {
    const auto det = determinant(a, field);
    auto adj = std::move(*inv);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) adj(i, j) = adj(i, j) * det;
    }
    return adj;
  }
  Matrix<typename F::Element> adj(n, n, field.zero());
  if (rank(a, field) + 2 <= n) return adj;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto cof = determinant(minor_matrix(a, j, i), field);
      adj(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return adj;
}

namespace detail {

template <Field F>
typename F::Element laplace_determinant(const Matrix<typename F::Element>& a, const F& field) {
  const std::size_t n = a.rows();
  if (n == 0) return field.one();
  if (n == 1) return a(0, 0);
  auto acc = field.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (field.is_zero(a(0, j))) continue;
    typename F::Element term = a(0, j) * laplace_determinant(minor_matrix(a, 0, j), field);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace detail

/// Determinant over a local ring whose maximal ideal satisfies
/// mathfrak{m}^{nilpotency} = 0 (jets truncated at order t have nilpotency
/// t + 1). Full pivoting on units; once no unit is left, the remaining block
/// lies in the maximal ideal, so its determinant vanishes when the block is
/// at least `nilpotency` wide and is expanded directly otherwise.
template <Field F>
typename F::Element determinant_local(Matrix<typename F::Element> a, const F& field, int nilpotency) {
  if (!a.is_square()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::size_t> col(n);
  for (std::size_t j = 0; j < n; ++j) col[j] = j;
  auto det = field.one();
  std::size_t step = 0;
  for (; step < n; ++step) {
    std::size_t pr = n, pc = n;
    for (std::size_t r = step; r < n && pr == n; ++r) {
      for (std::size_t c = step; c < n; ++c) {
        if (field.is_unit(a(r, col[c]))) {
          pr = r;
          pc = c;
          break;
        }
      }
    }
    if (pr == n) break;
    if (pr != step) {
      a.swap_rows(pr, step);
      det = -det;
    }
    if (pc != step) {
      std::swap(col[pc], col[step]);
      det = -det;
    }
    const auto& pivot = a(step, col[step]);
    det = det * pivot;
    const auto inv = field.inv(pivot);
    for (std::size_t r = step + 1; r < n; ++r) {
      if (field.is_zero(a(r, col[step]))) continue;
      const typename F::Element factor = a(r, col[step]) * inv;
      for (std::size_t k = step + 1; k < n; ++k) {
        a(r, col[k]) = a(r, col[k]) - factor * a(step, col[k]);
      }
    }
  }
  const std::size_t rest = n - step;
  if (rest == 0) return det;
  if (rest >= static_cast<std::size_t>(nilpotency)) return field.zero();
  Matrix<typename F::Element> block(rest, rest, field.zero());
  for (std::size_t i = 0; i < rest; ++i) {
    for (std::size_t j = 0; j < rest; ++j) block(i, j) = a(step + i, col[step + j]);
  }
  return det * detail::laplace_determinant(block, field);
}

}  // namespace taylorhess
