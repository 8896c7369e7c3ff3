#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>

#include "taylorhess/algebra/field.hpp"
#include "taylorhess/algebra/monomial_order.hpp"
#include "taylorhess/algebra/random.hpp"
#include "taylorhess/pade/pade.hpp"

namespace taylorhess {

/// Auxiliary multipliers lambda^j_alpha for the column operations, one vector
/// per block j above the base block, each indexed by the exponents alpha with
/// |alpha| = d_j = j - base_block.
template <class E>
struct LambdaAssignment {
  int base_block = 0;
  std::map<int, std::map<Exponent, E>> by_block;
};

namespace detail {

inline int base_block_of(const SymbolicMatrix& p) {
  const auto blocks = block_indices(p);
  if (blocks.empty()) throw UsageError("matrix has no column blocks");
  return blocks.back();
}

}  // namespace detail

/// Lambda assignment with every component drawn by `make(alpha, j)`.
template <class E, class Make>
LambdaAssignment<E> make_lambda(const SymbolicMatrix& p, Make make) {
  LambdaAssignment<E> lambda;
  lambda.base_block = detail::base_block_of(p);
  const int n = p.row_labels().front().nvars();
  for (int j : block_indices(p)) {
    if (j <= lambda.base_block) continue;
    auto& comp = lambda.by_block[j];
    for (const auto& alpha : monomials_of_degree(n, j - lambda.base_block, Direction::kDecreasing)) {
      comp.emplace(alpha, make(alpha, j));
    }
  }
  return lambda;
}

template <Field F>
LambdaAssignment<typename F::Element> zero_lambda(const SymbolicMatrix& p, const F& field) {
  return make_lambda<typename F::Element>(p, [&](const Exponent&, int) { return field.zero(); });
}

template <SamplableField F>
LambdaAssignment<typename F::Element> random_lambda(const SymbolicMatrix& p, const F& field,
                                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return make_lambda<typename F::Element>(p, [&](const Exponent&, int) { return field.sample(rng); });
}

/// Evaluates P at `point` and then, for every column sigma of a block j above
/// the base block, adds sum_alpha lambda^j_alpha times base-block column
/// sigma + alpha. In two variables with the standard layout this is the
/// shifted-window combination (0_{i-1}, lambda^j, 0_{e-d_j-i+1}) of the base
/// block's columns. Only base-block columns are added, and those are never
/// modified, so the determinant is unchanged.
template <Field F>
Matrix<typename F::Element> column_transform(const SymbolicMatrix& p,
                                             const LambdaAssignment<typename F::Element>& lambda,
                                             const PointAssignment<typename F::Element>& point,
                                             const F& field) {
  if (!p.is_square()) throw UsageError("column_transform: Padé matrix must be square");
  const int base = detail::base_block_of(p);
  if (lambda.base_block != base) throw UsageError("column_transform: lambda built for another base block");
  const int n = p.row_labels().front().nvars();

  std::map<Exponent, std::size_t> base_columns;
  for (std::size_t c = 0; c < p.cols(); ++c) {
    if (p.col_labels()[c].block == base) base_columns.emplace(p.col_labels()[c].sigma, c);
  }
  for (int j : block_indices(p)) {
    if (j <= base) continue;
    auto it = lambda.by_block.find(j);
    const auto expected = monomials_of_degree(n, j - base, Direction::kDecreasing);
    if (it == lambda.by_block.end() || it->second.size() != expected.size() ||
        !std::all_of(expected.begin(), expected.end(),
                     [&](const Exponent& a) { return it->second.count(a) == 1; })) {
      throw UsageError("column_transform: lambda^" + std::to_string(j) + " must have exactly " +
                       std::to_string(expected.size()) + " components of degree " +
                       std::to_string(j - base));
    }
  }

  const auto a = p.evaluate(point, field);
  auto out = a;
  for (std::size_t c = 0; c < p.cols(); ++c) {
    const auto& label = p.col_labels()[c];
    if (label.block <= base) continue;
    for (const auto& [alpha, weight] : lambda.by_block.at(label.block)) {
      if (field.is_zero(weight)) continue;
      auto src = base_columns.find(label.sigma + alpha);
      if (src == base_columns.end()) continue;  // base column deleted (reduced matrix)
      for (std::size_t r = 0; r < p.rows(); ++r) out(r, c) = out(r, c) + weight * a(r, src->second);
    }
  }
  return out;
}

}  // namespace taylorhess
