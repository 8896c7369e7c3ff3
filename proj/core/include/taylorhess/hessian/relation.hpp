#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "taylorhess/detcalc/derivatives.hpp"
#include "taylorhess/pade/pade.hpp"
#include "taylorhess/params.hpp"

namespace taylorhess {

/// Row label of the relation matrix: block j and multi-index alpha, |alpha| = d_j.
struct RelationRow {
  int block = 0;
  Exponent alpha;
};

/// Stacked matrix [M_{d+2}; ...; M_{d-e+3}] with (M_j)_{alpha,beta} =
/// f_{alpha+beta}; rows alpha with |alpha| = d_j = j - (d-e+2), columns beta
/// with |beta| = d-e+2 then |beta| = d-e+1. Two variables, m = d + 2 only.
template <class E>
struct RelationMatrix {
  std::vector<RelationRow> rows;
  std::vector<Exponent> cols;
  Matrix<E> values;
};

/// Throws UnsupportedParameters unless n = 2, m = d + 2 and P_T is square.
void check_relation_params(const TaylorParams& params);

/// Row labels: C(e+2, 2) - 1 of them.
std::vector<RelationRow> relation_rows(const TaylorParams& params);
/// Column labels: 2d - 2e + 5 of them.
std::vector<Exponent> relation_cols(const TaylorParams& params);

template <Field F>
RelationMatrix<typename F::Element> build_M(const TaylorParams& params,
                                            const std::map<Exponent, typename F::Element>& grad,
                                            const F& field) {
  check_relation_params(params);
  RelationMatrix<typename F::Element> out{relation_rows(params), relation_cols(params), {}};
  out.values = Matrix<typename F::Element>(out.rows.size(), out.cols.size(), field.zero());
  for (std::size_t r = 0; r < out.rows.size(); ++r) {
    for (std::size_t c = 0; c < out.cols.size(); ++c) {
      const Exponent gamma = out.rows[r].alpha + out.cols[c];
      auto it = grad.find(gamma);
      if (it == grad.end()) throw UsageError("build_M: gradient lacks f" + gamma.to_string());
      out.values(r, c) = it->second;
    }
  }
  return out;
}

/// M * c with c = (c_beta) in column order.
template <Field F>
std::vector<typename F::Element> relation_residual(const RelationMatrix<typename F::Element>& rel,
                                                   const PointAssignment<typename F::Element>& point,
                                                   const F& field) {
  std::vector<typename F::Element> c;
  for (const auto& beta : rel.cols) {
    auto it = point.find(beta);
    if (it == point.end()) throw UsageError("relation_residual: no value for c" + beta.to_string());
    c.push_back(it->second);
  }
  std::vector<typename F::Element> res(rel.rows.size(), field.zero());
  for (std::size_t r = 0; r < rel.rows.size(); ++r) {
    for (std::size_t k = 0; k < c.size(); ++k) res[r] = res[r] + rel.values(r, k) * c[k];
  }
  return res;
}

/// Gradient of det P_T at the point, M built from it, and M * c.
template <Field F>
std::vector<typename F::Element> verify_relations(const TaylorParams& params,
                                                  const PointAssignment<typename F::Element>& point,
                                                  const F& field) {
  check_relation_params(params);
  const auto p = pade_matrix(params);
  return relation_residual(build_M(params, grad_det_at(p, point, field), field), point, field);
}

/// Rank of M at the point.
template <Field F>
std::size_t rank_M_at(const TaylorParams& params, const PointAssignment<typename F::Element>& point,
                      const F& field) {
  check_relation_params(params);
  const auto p = pade_matrix(params);
  return rank(build_M(params, grad_det_at(p, point, field), field).values, field);
}

/// d det(P'_T) / d lambda^j_alpha at lambda = 0, one value per (j, alpha)
/// in relation_rows order: sum over the columns sigma of block j of the
/// cofactor expansion of column sigma against base-block column
/// sigma + alpha. These vanish identically (each term is a determinant
/// with a repeated column).
template <Field F>
std::vector<typename F::Element> lambda_derivatives(const TaylorParams& params,
                                                    const PointAssignment<typename F::Element>& point,
                                                    const F& field) {
  const auto p = pade_matrix(params);
  if (!p.is_square()) throw UsageError("lambda_derivatives: Padé matrix must be square");
  const auto blocks = block_indices(p);
  const int base = blocks.back();
  const auto a = p.evaluate(point, field);
  const auto adj = adjugate(a, field);
  std::map<Exponent, std::size_t> base_columns;
  for (std::size_t c = 0; c < p.cols(); ++c) {
    if (p.col_labels()[c].block == base) base_columns.emplace(p.col_labels()[c].sigma, c);
  }
  std::vector<typename F::Element> out;
  for (int j : blocks) {
    if (j <= base) continue;
    for (const auto& alpha : monomials_of_degree(params.n, j - base, Direction::kDecreasing)) {
      auto acc = field.zero();
      for (std::size_t c = 0; c < p.cols(); ++c) {
        if (p.col_labels()[c].block != j) continue;
        const std::size_t src = base_columns.at(p.col_labels()[c].sigma + alpha);
        for (std::size_t r = 0; r < p.rows(); ++r) acc = acc + adj(c, r) * a(r, src);
      }
      out.push_back(acc);
    }
  }
  return out;
}

}  // namespace taylorhess
