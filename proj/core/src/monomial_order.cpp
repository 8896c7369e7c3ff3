#include "taylorhess/algebra/monomial_order.hpp"

#include <algorithm>

#include "taylorhess/errors.hpp"

namespace taylorhess {
namespace {

void enumerate(int nvars, int remaining, std::vector<int>& prefix, std::vector<Exponent>& out) {
  const int pos = static_cast<int>(prefix.size());
  if (pos == nvars - 1) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  // Largest first: produces lexicographically decreasing order.
  for (int v = remaining; v >= 0; --v) {
    prefix.push_back(v);
    enumerate(nvars, remaining - v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

bool MonomialOrder::less(const Exponent& a, const Exponent& b) const {
  if (a.degree() != b.degree()) {
    return degree == Direction::kIncreasing ? a.degree() < b.degree() : a.degree() > b.degree();
  }
  return within_degree == Direction::kIncreasing ? a < b : b < a;
}

std::vector<Exponent> monomials_of_degree(int nvars, int k, Direction within) {
  if (nvars < 1) throw UsageError("monomials need at least one variable");
  std::vector<Exponent> out;
  if (k < 0) return out;
  std::vector<int> prefix;
  enumerate(nvars, k, prefix, out);
  if (within == Direction::kIncreasing) std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Exponent> monomials_in_range(int nvars, int lo, int hi, const MonomialOrder& order) {
  std::vector<Exponent> out;
  lo = std::max(lo, 0);
  for (int k = lo; k <= hi; ++k) {
    auto part = monomials_of_degree(nvars, k, order.within_degree);
    out.insert(out.end(), part.begin(), part.end());
  }
  if (order.degree == Direction::kDecreasing) {
    // Re-sort by degree only; std::stable_sort keeps the within-degree order.
    std::stable_sort(out.begin(), out.end(),
                     [](const Exponent& a, const Exponent& b) { return a.degree() > b.degree(); });
  }
  return out;
}

}  // namespace taylorhess
