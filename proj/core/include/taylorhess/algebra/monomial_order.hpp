#pragma once

#include <vector>

#include "taylorhess/algebra/exponent.hpp"

namespace taylorhess {

enum class Direction { kIncreasing, kDecreasing };

/// Graded order on exponents: first by total degree, then lexicographically on
/// the parts inside one degree. Each comparison has its own direction.
struct MonomialOrder {
  Direction degree = Direction::kIncreasing;
  Direction within_degree = Direction::kDecreasing;

  bool less(const Exponent& a, const Exponent& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// All exponents in n variables of total degree k, lexicographically sorted in
/// the given direction.
std::vector<Exponent> monomials_of_degree(int nvars, int k, Direction within);

/// All exponents with lo <= |gamma| <= hi, sorted by `order`.
std::vector<Exponent> monomials_in_range(int nvars, int lo, int hi, const MonomialOrder& order);

}  // namespace taylorhess
