#include "taylorhess/algebra/rational.hpp"

namespace taylorhess {

Fp reduce(const Integer& x, const PrimeField& field) {
  const Integer p(std::to_string(field.modulus()));
  Integer r = x % p;
  if (r < 0) r += p;
  return field.from_u64(std::stoull(r.get_str()));
}

Fp reduce(const Rational& x, const PrimeField& field) {
  const Fp den = reduce(x.get_den(), field);
  if (den.value() == 0) {
    throw DomainError("denominator of " + x.get_str() + " vanishes modulo " +
                      std::to_string(field.modulus()));
  }
  return reduce(x.get_num(), field) / den;
}

Polynomial<PrimeField> reduce(const Polynomial<RationalField>& f, const PrimeField& field) {
  Polynomial<PrimeField> r(field, f.nvars());
  for (const auto& [e, c] : f.terms()) r.add_term(e, reduce(c, field));
  return r;
}

}  // namespace taylorhess
