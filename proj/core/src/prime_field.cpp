#include "taylorhess/algebra/prime_field.hpp"

namespace taylorhess {
namespace {

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Fp Fp::pow(u64 e) const { return Fp(pow_mod(value_, e, modulus_), modulus_); }

Fp Fp::inverse() const {
  if (value_ == 0) throw DomainError("inverse of zero in F_p");
  return pow(modulus_ - 2);
}

PrimeField::PrimeField(u64 p) : p_(p) {
  if (p >= (1ULL << 63)) throw UsageError("prime modulus must be below 2^63");
  if (!is_prime_u64(p)) throw UsageError("modulus " + std::to_string(p) + " is not prime");
}

Fp PrimeField::from_int(long long v) const {
  if (v >= 0) return Fp(static_cast<u64>(v) % p_, p_);
  const u64 mag = static_cast<u64>(-(v + 1)) + 1;
  return -Fp(mag % p_, p_);
}

}  // namespace taylorhess
