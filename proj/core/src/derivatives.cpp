#include "taylorhess/detcalc/derivatives.hpp"

namespace taylorhess {

DerivativePattern::DerivativePattern(const SymbolicMatrix& p)
    : rows_(p.rows()), cols_(p.cols()), variables_(p.variables()) {
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < p.cols(); ++c) {
      if (const Entry& e = p(r, c)) occurrences_[*e].emplace_back(r, c);
    }
  }
}

std::span<const Position> DerivativePattern::occurrences(const Exponent& gamma) const {
  auto it = occurrences_.find(gamma);
  if (it == occurrences_.end()) return {};
  return it->second;
}

Matrix<int> DerivativePattern::incidence(const Exponent& gamma) const {
  Matrix<int> e(rows_, cols_, 0);
  for (const auto& [r, c] : occurrences(gamma)) e(r, c) = 1;
  return e;
}

}  // namespace taylorhess
