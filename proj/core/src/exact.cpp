#include "taylorhess/detcalc/exact.hpp"

namespace taylorhess {

Fp det_modp(const Matrix<Fp>& m) {
  if (!m.is_square()) throw UsageError("det_modp: matrix is not square");
  if (m.rows() == 0) return Fp(1, kDefaultPrimes[0]);
  return determinant(m, PrimeField(m(0, 0).modulus()));
}

Integer det_bareiss(Matrix<Integer> a) {
  if (!a.is_square()) throw UsageError("det_bareiss: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational det_exact(const Matrix<Rational>& m) {
  if (!m.is_square()) throw UsageError("det_exact: matrix is not square");
  const std::size_t n = m.rows();
  Matrix<Integer> a(n, n, Integer(0));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  Rational r(det_bareiss(std::move(a)), scale);
  r.canonicalize();
  return r;
}

Matrix<Fp> reduce(const Matrix<Rational>& m, const PrimeField& field) {
  Matrix<Fp> r(m.rows(), m.cols(), field.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = reduce(m(i, j), field);
  }
  return r;
}

}  // namespace taylorhess
