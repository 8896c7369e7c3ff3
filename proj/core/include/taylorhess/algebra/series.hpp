#pragma once

#include <utility>

#include "taylorhess/algebra/polynomial.hpp"

namespace taylorhess {

/// Power series truncated at total degree `order`: no stored term has degree
/// greater than the order.
template <Field F>
class TruncatedSeries {
 public:
  using Element = typename F::Element;

  TruncatedSeries(Polynomial<F> poly, int order)
      : poly_(poly.truncated(order)), order_(order) {
    if (order < 0) throw UsageError("truncation order must be non-negative");
  }

  static TruncatedSeries one(const F& field, int nvars, int order) {
    return TruncatedSeries(Polynomial<F>::constant(field, nvars, field.one()), order);
  }

  const Polynomial<F>& polynomial() const { return poly_; }
  const F& field() const { return poly_.field(); }
  int nvars() const { return poly_.nvars(); }
  int order() const { return order_; }
  Element coefficient(const Exponent& e) const { return poly_.coefficient(e); }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return TruncatedSeries(a.poly_ + b.poly_, std::min(a.order_, b.order_));
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return TruncatedSeries(a.poly_ - b.poly_, std::min(a.order_, b.order_));
  }

  /// Series are equal when orders and term maps agree.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.poly_ == b.poly_;
  }

 private:
  Polynomial<F> poly_;
  int order_;
};

/// Product of a and b with every term of degree > order removed.
template <Field F>
TruncatedSeries<F> series_mul(const TruncatedSeries<F>& a, const TruncatedSeries<F>& b, int order) {
  if (a.nvars() != b.nvars()) throw UsageError("series_mul: different numbers of variables");
  if (!(a.field() == b.field())) throw UsageError("series_mul: different coefficient fields");
  Polynomial<F> r(a.field(), a.nvars());
  for (const auto& [ea, ca] : a.polynomial().terms()) {
    if (ea.degree() > order) continue;
    for (const auto& [eb, cb] : b.polynomial().terms()) {
      if (ea.degree() + eb.degree() > order) continue;
      r.add_term(ea + eb, ca * cb);
    }
  }
  return TruncatedSeries<F>(std::move(r), order);
}

/// r with q * r = 1 modulo degree order + 1. Requires q(0) = 1 exactly.
///
/// Degree-by-degree: r_0 = 1 and for k >= 1,
/// r_k = -sum_{0 < |mu| <= k} q_mu r_{k-|mu|} restricted to degree k.
template <Field F>
TruncatedSeries<F> series_inverse(const TruncatedSeries<F>& q, int order) {
  const F& field = q.field();
  const int n = q.nvars();
  if (!(q.coefficient(Exponent::zero(n)) == field.one())) {
    throw DomainError("series_inverse: constant term must equal 1");
  }
  if (order < 0) throw UsageError("series_inverse: negative order");
  // Homogeneous parts of q and of the result, indexed by degree.
  std::vector<Polynomial<F>> qh(order + 1, Polynomial<F>(field, n));
  for (const auto& [e, c] : q.polynomial().terms()) {
    if (e.degree() <= order) qh[e.degree()].add_term(e, c);
  }
  std::vector<Polynomial<F>> rh(order + 1, Polynomial<F>(field, n));
  rh[0] = Polynomial<F>::constant(field, n, field.one());
  for (int k = 1; k <= order; ++k) {
    Polynomial<F> acc(field, n);
    for (int j = 1; j <= k; ++j) {
      if (qh[j].is_zero() || rh[k - j].is_zero()) continue;
      acc += qh[j] * rh[k - j];
    }
    rh[k] = -acc;
  }
  Polynomial<F> r(field, n);
  for (auto& part : rh) r += part;
  return TruncatedSeries<F>(std::move(r), order);
}

}  // namespace taylorhess
