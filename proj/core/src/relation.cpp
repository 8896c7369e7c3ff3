#include "taylorhess/hessian/relation.hpp"

namespace taylorhess {

void check_relation_params(const TaylorParams& params) {
  if (params.n != 2 || params.m != params.d + 2) {
    throw UnsupportedParameters("relation matrix needs n = 2 and m = d + 2, got " + params.to_string());
  }
  if (params.e < 1 || params.e > params.d + 1) {
    throw UnsupportedParameters("relation matrix needs 1 <= e <= d + 1, got " + params.to_string());
  }
  const auto shape = pade_shape(params);
  if (shape.rows != shape.cols) {
    throw UnsupportedParameters("relation matrix needs a square Padé matrix, got " + params.to_string());
  }
}

std::vector<RelationRow> relation_rows(const TaylorParams& params) {
  check_relation_params(params);
  const int base = params.d - params.e + 2;
  std::vector<RelationRow> rows;
  for (int j = params.d + 2; j > base; --j) {
    for (auto& alpha : monomials_of_degree(2, j - base, Direction::kDecreasing)) {
      rows.push_back({j, std::move(alpha)});
    }
  }
  return rows;
}

std::vector<Exponent> relation_cols(const TaylorParams& params) {
  check_relation_params(params);
  const int top = params.d - params.e + 2;
  auto cols = monomials_of_degree(2, top, Direction::kDecreasing);
  for (auto& beta : monomials_of_degree(2, top - 1, Direction::kDecreasing)) cols.push_back(std::move(beta));
  return cols;
}

}  // namespace taylorhess
