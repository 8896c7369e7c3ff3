#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "taylorhess/errors.hpp"

namespace taylorhess {

/// Truncated jet a + sum a_i e_i + sum_{i<=j} a_ij e_i e_j over a base ring,
/// with k infinitesimals and truncation order 1 or 2: every product of more
/// than `order` infinitesimals vanishes.
///
/// Coefficient layout: [constant | linear (k) | quadratic upper triangle
/// (k(k+1)/2, row-major over i <= j)]. The quadratic block is absent for
/// order 1.
template <class E>
class Jet {
 public:
  Jet() = default;
  Jet(E constant, const E& zero, int k, int order) : k_(k), order_(order) {
    if (order < 1 || order > 2) throw UsageError("jet truncation order must be 1 or 2");
    coeffs_.assign(size_for(k, order), zero);
    coeffs_[0] = std::move(constant);
  }

  static std::size_t size_for(int k, int order) {
    const auto kk = static_cast<std::size_t>(k);
    return 1 + kk + (order == 2 ? kk * (kk + 1) / 2 : 0);
  }

  int infinitesimals() const { return k_; }
  int order() const { return order_; }

  const E& constant() const { return coeffs_[0]; }
  E& constant() { return coeffs_[0]; }
  const E& linear(int i) const { return coeffs_[1 + i]; }
  E& linear(int i) { return coeffs_[1 + i]; }
  /// Coefficient of e_i e_j (symmetric in i, j).
  const E& quadratic(int i, int j) const { return coeffs_[quad_index(i, j)]; }
  E& quadratic(int i, int j) { return coeffs_[quad_index(i, j)]; }

  const std::vector<E>& coefficients() const { return coeffs_; }

  Jet& operator+=(const Jet& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  Jet operator-() const {
    Jet r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    a.check(b);
    Jet r = a;
    const E& a0 = a.coeffs_[0];
    const E& b0 = b.coeffs_[0];
    r.coeffs_[0] = a0 * b0;
    for (int i = 0; i < a.k_; ++i) r.linear(i) = a0 * b.linear(i) + a.linear(i) * b0;
    if (a.order_ == 2) {
      for (int i = 0; i < a.k_; ++i) {
        for (int j = i; j < a.k_; ++j) {
          E v = a0 * b.quadratic(i, j) + a.quadratic(i, j) * b0 + a.linear(i) * b.linear(j);
          if (i != j) v += a.linear(j) * b.linear(i);
          r.quadratic(i, j) = std::move(v);
        }
      }
    }
    return r;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }

  friend bool operator==(const Jet& a, const Jet& b) {
    return a.k_ == b.k_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t quad_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    const auto k = static_cast<std::size_t>(k_);
    const auto ii = static_cast<std::size_t>(i);
    // rows 0..i-1 of the upper triangle hold sum_{r<i} (k - r) entries
    return 1 + k + ii * k - ii * (ii - 1) / 2 + static_cast<std::size_t>(j - i);
  }
  void check(const Jet& o) const {
    if (o.k_ != k_ || o.order_ != order_) throw UsageError("jet shape mismatch");
  }

  std::vector<E> coeffs_;
  int k_ = 0;
  int order_ = 1;
};

/// Jet ring over a base field with a fixed number of infinitesimals.
template <class BaseField>
class JetField {
 public:
  using Base = typename BaseField::Element;
  using Element = Jet<Base>;

  JetField(BaseField base, int infinitesimals, int order = 2)
      : base_(std::move(base)), k_(infinitesimals), order_(order) {
    if (k_ < 0) throw UsageError("negative number of infinitesimals");
    if (order_ < 1 || order_ > 2) throw UsageError("jet truncation order must be 1 or 2");
  }

  const BaseField& base() const { return base_; }
  int infinitesimals() const { return k_; }
  int order() const { return order_; }

  Element zero() const { return Element(base_.zero(), base_.zero(), k_, order_); }
  Element one() const { return Element(base_.one(), base_.zero(), k_, order_); }
  Element from_int(long long v) const { return Element(base_.from_int(v), base_.zero(), k_, order_); }
  /// Embeds a base element as a constant jet.
  Element constant(const Base& v) const { return Element(v, base_.zero(), k_, order_); }
  /// v + e_i.
  Element variable(const Base& v, int i) const {
    Element r = constant(v);
    r.linear(i) = base_.one();
    return r;
  }

  bool is_zero(const Element& x) const {
    for (const auto& c : x.coefficients()) {
      if (!base_.is_zero(c)) return false;
    }
    return true;
  }
  /// Units are exactly the jets with invertible constant term.
  bool is_unit(const Element& x) const { return !base_.is_zero(x.constant()); }

  /// Inverse of a unit via (a0 + N)^-1 = u - u^2 N + u^3 N^2 with u = 1/a0.
  Element inv(const Element& x) const {
    if (!is_unit(x)) throw DomainError("jet with zero constant term is not invertible");
    Element r = x;
    const Base u = base_.inv(x.constant());
    const Base u2 = u * u;
    r.constant() = u;
    for (int i = 0; i < k_; ++i) r.linear(i) = -(u2 * x.linear(i));
    if (order_ == 2) {
      const Base u3 = u2 * u;
      for (int i = 0; i < k_; ++i) {
        for (int j = i; j < k_; ++j) {
          Base v = u3 * x.linear(i) * x.linear(j);
          if (i != j) v += v;
          r.quadratic(i, j) = v - u2 * x.quadratic(i, j);
        }
      }
    }
    return r;
  }

  friend bool operator==(const JetField&, const JetField&) = default;

 private:
  BaseField base_;
  int k_;
  int order_;
};

}  // namespace taylorhess
