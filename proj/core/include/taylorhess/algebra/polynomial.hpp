#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "taylorhess/algebra/exponent.hpp"
#include "taylorhess/algebra/field.hpp"
#include "taylorhess/errors.hpp"

namespace taylorhess {

/// Sparse multivariate polynomial. Zero coefficients are never stored, so two
/// polynomials are equal exactly when their term maps are equal.
template <Field F>
class Polynomial {
 public:
  using Element = typename F::Element;
  using Terms = std::map<Exponent, Element>;

  Polynomial(F field, int nvars) : field_(std::move(field)), nvars_(nvars) {
    if (nvars < 1) throw UsageError("polynomial needs at least one variable");
  }

  static Polynomial constant(F field, int nvars, Element c) {
    Polynomial p(std::move(field), nvars);
    p.add_term(Exponent::zero(nvars), std::move(c));
    return p;
  }
  static Polynomial monomial(F field, const Exponent& e, Element c) {
    Polynomial p(std::move(field), e.nvars());
    p.add_term(e, std::move(c));
    return p;
  }

  const F& field() const { return field_; }
  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of x^e (zero when absent).
  Element coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// Adds c x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, Element c) {
    if (e.nvars() != nvars_) throw UsageError("exponent arity does not match polynomial");
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e.degree());
    return deg;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int deg = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [deg](const auto& t) { return t.first.degree() == deg; });
  }

  /// Formal partial derivative in variable i.
  Polynomial derivative(int i) const {
    if (i < 0 || i >= nvars_) throw UsageError("derivative: variable index out of range");
    Polynomial r(field_, nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      std::vector<int> parts(e.parts().begin(), e.parts().end());
      const Element k = field_.from_int(parts[i]);
      parts[i] -= 1;
      r.add_term(Exponent(std::move(parts)), c * k);
    }
    return r;
  }

  /// Value at a point given as one coordinate per variable.
  Element evaluate(std::span<const Element> point) const {
    if (point.size() != static_cast<std::size_t>(nvars_)) {
      throw UsageError("evaluate: point arity does not match polynomial");
    }
    Element acc = field_.zero();
    for (const auto& [e, c] : terms_) {
      Element term = c;
      for (int i = 0; i < nvars_; ++i) {
        for (int k = 0; k < e[i]; ++k) term = term * point[i];
      }
      acc = acc + term;
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r(field_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    Polynomial r(a.field_, a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
  }
  Polynomial scaled(const Element& k) const {
    Polynomial r(field_, nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * k);
    return r;
  }

  /// Drops every term of degree > order.
  Polynomial truncated(int order) const {
    Polynomial r(field_, nvars_);
    for (const auto& [e, c] : terms_) {
      if (e.degree() <= order) r.terms_.emplace(e, c);
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw UsageError("polynomials over different numbers of variables");
    if (!(o.field_ == field_)) throw UsageError("polynomials over different coefficient fields");
  }

  F field_;
  int nvars_;
  Terms terms_;
};

}  // namespace taylorhess
