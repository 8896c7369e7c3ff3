#pragma once

#include <concepts>
#include <random>

namespace taylorhess {

/// A commutative coefficient ring with a unit test: prime fields, the
/// rationals, and jet rings over either.
template <class F>
concept Field = requires(const F& f, const typename F::Element& a, long long v) {
  { f.zero() } -> std::convertible_to<typename F::Element>;
  { f.one() } -> std::convertible_to<typename F::Element>;
  { f.from_int(v) } -> std::convertible_to<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.is_unit(a) } -> std::convertible_to<bool>;
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
  { a + a } -> std::convertible_to<typename F::Element>;
  { a - a } -> std::convertible_to<typename F::Element>;
  { a * a } -> std::convertible_to<typename F::Element>;
  { -a } -> std::convertible_to<typename F::Element>;
  { a == a } -> std::convertible_to<bool>;
};

/// Fields we can draw random points from (prime fields and the rationals).
template <class F>
concept SamplableField = Field<F> && requires(const F& f, std::mt19937_64& rng) {
  { f.sample(rng) } -> std::convertible_to<typename F::Element>;
};

}  // namespace taylorhess
