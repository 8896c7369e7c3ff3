#pragma once

#include <gmpxx.h>

#include <random>

#include "taylorhess/algebra/polynomial.hpp"
#include "taylorhess/algebra/prime_field.hpp"

namespace taylorhess {

using Integer = mpz_class;
using Rational = mpq_class;

/// The rationals. Sampling draws integers uniformly from [-bound, bound].
class RationalField {
 public:
  using Element = Rational;

  explicit RationalField(long bound = 100) : bound_(bound) {}

  long bound() const { return bound_; }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long v) const { return Rational(static_cast<long>(v)); }
  bool is_zero(const Rational& x) const { return sgn(x) == 0; }
  bool is_unit(const Rational& x) const { return sgn(x) != 0; }
  Rational inv(const Rational& x) const {
    if (sgn(x) == 0) throw DomainError("inverse of rational zero");
    return Rational(1) / x;
  }
  Rational sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<long> dist(-bound_, bound_);
    return Rational(dist(rng));
  }

  friend bool operator==(const RationalField&, const RationalField&) = default;

 private:
  long bound_;
};

/// Image of a rational in F_p; throws DomainError if p divides the denominator.
Fp reduce(const Rational& x, const PrimeField& field);
/// Image of an integer in F_p.
Fp reduce(const Integer& x, const PrimeField& field);
/// Coefficientwise reduction of a rational polynomial.
Polynomial<PrimeField> reduce(const Polynomial<RationalField>& f, const PrimeField& field);

}  // namespace taylorhess
