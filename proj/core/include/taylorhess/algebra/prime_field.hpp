#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <random>

#include "taylorhess/errors.hpp"

namespace taylorhess {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

/// Primes just below 2^62, largest first. Modular runs rotate through them.
inline constexpr std::array<u64, 8> kDefaultPrimes = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387761ULL, 4611686018427387751ULL, 4611686018427387737ULL,
    4611686018427387733ULL, 4611686018427387709ULL,
};

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n);

/// Element of Z/pZ. Keeps its modulus so that arithmetic needs no context;
/// the value is always reduced into [0, p).
class Fp {
 public:
  Fp() = default;
  Fp(u64 value, u64 modulus) : value_(value % modulus), modulus_(modulus) {}

  u64 value() const { return value_; }
  u64 modulus() const { return modulus_; }

  Fp& operator+=(const Fp& o) {
    check(o);
    value_ += o.value_;  // p < 2^63, no overflow
    if (value_ >= modulus_) value_ -= modulus_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    check(o);
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    check(o);
    value_ = static_cast<u64>(static_cast<u128>(value_) * o.value_ % modulus_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  Fp operator-() const { return Fp(value_ == 0 ? 0 : modulus_ - value_, modulus_); }

  friend bool operator==(const Fp&, const Fp&) = default;

  Fp pow(u64 e) const;
  /// Multiplicative inverse; throws DomainError on zero.
  Fp inverse() const;

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value_; }

 private:
  void check(const Fp& o) const {
    if (o.modulus_ != modulus_) throw UsageError("Fp: mixed moduli");
  }

  u64 value_ = 0;
  u64 modulus_ = 1;
};

/// The field F_p as a value: factory for elements and uniform sampler.
class PrimeField {
 public:
  using Element = Fp;

  /// Throws UsageError unless p is prime and p < 2^63.
  explicit PrimeField(u64 p = kDefaultPrimes[0]);

  u64 modulus() const { return p_; }
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }
  Fp from_int(long long v) const;
  Fp from_u64(u64 v) const { return Fp(v, p_); }
  bool is_zero(const Fp& x) const { return x.value() == 0; }
  bool is_unit(const Fp& x) const { return x.value() != 0; }
  Fp inv(const Fp& x) const { return x.inverse(); }
  Fp sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<u64> dist(0, p_ - 1);
    return Fp(dist(rng), p_);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  u64 p_;
};

}  // namespace taylorhess
