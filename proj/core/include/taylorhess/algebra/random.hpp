#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>

#include "taylorhess/algebra/exponent.hpp"
#include "taylorhess/algebra/field.hpp"
#include "taylorhess/errors.hpp"

namespace taylorhess {

/// Values assigned to the coordinates c_gamma.
template <class E>
using PointAssignment = std::map<Exponent, E>;

/// SplitMix64 step; used to derive independent per-trial seeds from one seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent uniform values for each listed exponent, in list order.
/// Deterministic for a fixed seed.
template <SamplableField F>
PointAssignment<typename F::Element> random_point(std::span<const Exponent> vars, const F& field,
                                                  std::uint64_t seed) {
  if (vars.empty()) throw UsageError("random_point: empty variable list");
  std::mt19937_64 rng(seed);
  PointAssignment<typename F::Element> point;
  for (const auto& v : vars) point.insert_or_assign(v, field.sample(rng));
  return point;
}

}  // namespace taylorhess
