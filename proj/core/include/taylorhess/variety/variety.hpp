#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "taylorhess/algebra/monomial_order.hpp"
#include "taylorhess/algebra/prime_field.hpp"
#include "taylorhess/algebra/random.hpp"
#include "taylorhess/algebra/series.hpp"
#include "taylorhess/detcalc/linalg.hpp"
#include "taylorhess/pade/pade.hpp"
#include "taylorhess/params.hpp"

namespace taylorhess {

/// N = C(m+n, n) - 1: the dimension of the ambient projective space.
long long ambient_dimension(const TaylorParams& params);

/// min{ C(d+n,n) + C(e+n,n) - 2, C(m+n,n) - 1 }.
long long expected_dimension(const TaylorParams& params);

/// Coordinates 0 < |gamma| <= m in the canonical (degree-increasing) order.
std::vector<Exponent> taylor_coordinates(const TaylorParams& params);

/// P/Q with P(0) = Q(0) = 1, deg P <= d, deg Q <= e.
template <Field F>
struct RationalPair {
  Polynomial<F> numerator;
  Polynomial<F> denominator;

  /// Throws UsageError unless constants are exactly 1 and degrees are in bounds.
  void validate(int d, int e) const {
    const auto& field = numerator.field();
    const auto zero = Exponent::zero(numerator.nvars());
    if (!(numerator.coefficient(zero) == field.one()) || !(denominator.coefficient(zero) == field.one())) {
      throw UsageError("rational pair: P(0) and Q(0) must both equal 1");
    }
    if (numerator.degree() > d || denominator.degree() > e) {
      throw UsageError("rational pair: degree bound exceeded");
    }
  }
};

/// Uniformly random pair for the given parameters.
template <SamplableField F>
RationalPair<F> random_rational_pair(const TaylorParams& params, const F& field, std::uint64_t seed) {
  params.validate();
  std::mt19937_64 rng(seed);
  const MonomialOrder order{Direction::kIncreasing, Direction::kDecreasing};
  auto draw = [&](int deg) {
    Polynomial<F> p = Polynomial<F>::constant(field, params.n, field.one());
    for (const auto& g : monomials_in_range(params.n, 1, deg, order)) p.add_term(g, field.sample(rng));
    return p;
  };
  RationalPair<F> pair{draw(params.d), draw(params.e)};
  return pair;
}

/// Taylor coefficients (c_gamma)_{0<|gamma|<=m} of P/Q, so that
/// Q (1 + sum c_gamma x^gamma) = P modulo degree m + 1. Every coordinate is
/// present, zeros included.
template <Field F>
PointAssignment<typename F::Element> taylor_coeffs(const RationalPair<F>& pq, int m) {
  const auto& field = pq.numerator.field();
  const int n = pq.numerator.nvars();
  const TruncatedSeries<F> p(pq.numerator, m);
  const auto t = series_mul(p, series_inverse(TruncatedSeries<F>(pq.denominator, m), m), m);
  PointAssignment<typename F::Element> coeffs;
  const MonomialOrder order{Direction::kIncreasing, Direction::kDecreasing};
  for (const auto& g : monomials_in_range(n, 1, m, order)) coeffs.emplace(g, t.coefficient(g));
  (void)field;
  return coeffs;
}

/// Jacobian of psi: (P, Q) -> (c_gamma) at the pair. Rows follow
/// taylor_coordinates(params); columns are the non-constant coefficients of
/// P (d/dp_beta T = x^beta / Q) then of Q (d/dq_beta T = -x^beta P / Q^2).
template <Field F>
Matrix<typename F::Element> psi_jacobian(const RationalPair<F>& pq, const TaylorParams& params) {
  params.validate();
  const auto& field = pq.numerator.field();
  const int n = params.n;
  const int m = params.m;
  const MonomialOrder order{Direction::kIncreasing, Direction::kDecreasing};
  const auto rows = taylor_coordinates(params);
  const auto p_terms = monomials_in_range(n, 1, params.d, order);
  const auto q_terms = monomials_in_range(n, 1, params.e, order);

  const TruncatedSeries<F> q_inv = series_inverse(TruncatedSeries<F>(pq.denominator, m), m);
  const TruncatedSeries<F> q_inv2 = series_mul(q_inv, q_inv, m);
  const TruncatedSeries<F> p_over_q2 = series_mul(TruncatedSeries<F>(pq.numerator, m), q_inv2, m);

  Matrix<typename F::Element> jac(rows.size(), p_terms.size() + q_terms.size(), field.zero());
  auto fill = [&](std::size_t col, const TruncatedSeries<F>& s, bool negate) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto v = s.coefficient(rows[r]);
      jac(r, col) = negate ? -v : v;
    }
  };
  for (std::size_t k = 0; k < p_terms.size(); ++k) {
    const TruncatedSeries<F> xb(Polynomial<F>::monomial(field, p_terms[k], field.one()), m);
    fill(k, series_mul(xb, q_inv, m), false);
  }
  for (std::size_t k = 0; k < q_terms.size(); ++k) {
    const TruncatedSeries<F> xb(Polynomial<F>::monomial(field, q_terms[k], field.one()), m);
    fill(p_terms.size() + k, series_mul(xb, p_over_q2, m), true);
  }
  return jac;
}

/// Generic rank of psi's Jacobian: the maximum over `trials` random pairs.
/// A lower bound on the dimension of the Taylor variety, exact generically.
template <SamplableField F>
long long actual_dimension(const TaylorParams& params, int trials, const F& field, std::uint64_t seed) {
  if (trials < 1) throw UsageError("actual_dimension: need at least one trial");
  long long best = 0;
  for (int t = 0; t < trials; ++t) {
    const auto pq = random_rational_pair(params, field, derive_seed(seed, static_cast<std::uint64_t>(t)));
    best = std::max<long long>(best, static_cast<long long>(rank(psi_jacobian(pq, params), field)));
  }
  return best;
}

/// Whether phi_T has a nontrivial kernel: rank P_T(T) < C(e+n, n). The
/// constant coordinate c_0 is taken to be 1.
template <Field F>
bool membership(const PointAssignment<typename F::Element>& t, const TaylorParams& params, const F& field) {
  const auto p = pade_matrix(params);
  auto point = t;
  point.insert_or_assign(Exponent::zero(params.n), field.one());
  return rank(p.evaluate(point, field), field) < p.cols();
}

enum class HypersurfaceVerdict { kNonDefectiveHypersurface, kNonDefective, kDefective };

std::string to_string(HypersurfaceVerdict v);

struct HypersurfaceReport {
  TaylorParams params;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool square = false;
  /// Trials where det P_T(random point) was evaluated and how many were nonzero.
  int det_trials = 0;
  int det_nonzero = 0;
  long long expected_dimension = 0;
  long long actual_dimension = 0;
  long long ambient_dimension = 0;
  HypersurfaceVerdict verdict = HypersurfaceVerdict::kDefective;

  bool det_certified_nonzero() const { return det_nonzero > 0; }
};

/// Squareness of P_T, det P_T != 0 at some random point over F_p (certifying
/// det P_T is not identically zero), and actual = expected = N - 1. Trial t
/// uses primes[t % primes.size()]; the dimension is the best of
/// `dimension_trials` Jacobian ranks.
HypersurfaceReport nondefective_hypersurface_check(const TaylorParams& params, int trials,
                                                   std::uint64_t seed,
                                                   std::span<const u64> primes = kDefaultPrimes,
                                                   int dimension_trials = 3);

struct SquareCase {
  int d = 0;
  int e = 0;
  int m = 0;
  friend bool operator==(const SquareCase&, const SquareCase&) = default;
};

/// All (d, e, d + 2) with 1 <= e <= e_max, (e+1)(e+2)/2 = 2d + 5 and d >= e.
std::vector<SquareCase> square_family(int e_max);

}  // namespace taylorhess
