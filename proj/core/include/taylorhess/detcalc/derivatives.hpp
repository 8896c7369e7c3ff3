#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "taylorhess/algebra/jet.hpp"
#include "taylorhess/detcalc/linalg.hpp"
#include "taylorhess/pade/symbolic_matrix.hpp"

namespace taylorhess {

using Position = std::pair<std::size_t, std::size_t>;

/// Incidence data E_gamma = dP/dc_gamma: the (row, col) positions where each
/// variable occurs. Every E_gamma is 0/1 with one 1 per occurrence.
class DerivativePattern {
 public:
  explicit DerivativePattern(const SymbolicMatrix& p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  /// Variables occurring in P, sorted.
  const std::vector<Exponent>& variables() const { return variables_; }
  /// Positions of gamma; empty if gamma does not occur.
  std::span<const Position> occurrences(const Exponent& gamma) const;
  /// E_gamma as a 0/1 integer matrix.
  Matrix<int> incidence(const Exponent& gamma) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Exponent> variables_;
  std::map<Exponent, std::vector<Position>> occurrences_;
};

/// Which coordinates a Hessian is taken over: every ambient coordinate, or
/// only those occurring in P.
enum class VariableSet { kFull, kEssential };

inline std::vector<Exponent> variables_for(const SymbolicMatrix& p, VariableSet set) {
  return set == VariableSet::kFull ? p.ambient() : p.variables();
}

/// f_gamma = d det(P) / dc_gamma at `point` for every occurring gamma,
/// computed as tr(adj(A) E_gamma): the sum of the cofactors of A = P(point)
/// at the occurrence positions. Valid at singular points.
template <Field F>
std::map<Exponent, typename F::Element> grad_det_at(const SymbolicMatrix& p,
                                                    const PointAssignment<typename F::Element>& point,
                                                    const F& field) {
  if (!p.is_square()) throw UsageError("grad_det_at: matrix is not square");
  const DerivativePattern pattern(p);
  const auto adj = adjugate(p.evaluate(point, field), field);
  std::map<Exponent, typename F::Element> grad;
  for (const auto& gamma : pattern.variables()) {
    auto acc = field.zero();
    for (const auto& [r, c] : pattern.occurrences(gamma)) acc = acc + adj(c, r);
    grad.emplace(gamma, std::move(acc));
  }
  return grad;
}

/// det(P) over the first-order jet ring with one infinitesimal per occurring
/// variable, c_gamma -> value + e_gamma; the e_gamma coefficients are the
/// partial derivatives.
template <Field F>
std::map<Exponent, typename F::Element> jet_grad_det(const SymbolicMatrix& p,
                                                     const PointAssignment<typename F::Element>& point,
                                                     const F& field) {
  if (!p.is_square()) throw UsageError("jet_grad_det: matrix is not square");
  const auto vars = p.variables();
  const JetField<F> jets(field, static_cast<int>(vars.size()), 1);
  PointAssignment<typename JetField<F>::Element> jet_point;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = point.find(vars[i]);
    if (it == point.end()) throw UsageError("no value assigned to c" + vars[i].to_string());
    jet_point.emplace(vars[i], jets.variable(it->second, static_cast<int>(i)));
  }
  const auto det = determinant_local(p.evaluate(jet_point, jets), jets, 2);
  std::map<Exponent, typename F::Element> grad;
  for (std::size_t i = 0; i < vars.size(); ++i) grad.emplace(vars[i], det.linear(static_cast<int>(i)));
  return grad;
}

/// d^2 det(P) / dc_alpha dc_beta at `point`, read off the e_1 e_2 coefficient
/// of det(P) with c_alpha -> c_alpha + e_1 and c_beta -> c_beta + e_2 over
/// second-order jets. Works at singular points.
template <Field F>
typename F::Element jet_hessian_entry(const SymbolicMatrix& p,
                                      const PointAssignment<typename F::Element>& point,
                                      const F& field, const Exponent& alpha, const Exponent& beta) {
  if (!p.is_square()) throw UsageError("jet_hessian_entry: matrix is not square");
  const JetField<F> jets(field, 2, 2);
  const auto a = p.evaluate(point, field);
  Matrix<typename JetField<F>::Element> lifted(a.rows(), a.cols(), jets.zero());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      auto v = jets.constant(a(r, c));
      const Entry& ent = p(r, c);
      if (ent && *ent == alpha) v.linear(0) = field.one();
      if (ent && *ent == beta) v.linear(1) = field.one();
      lifted(r, c) = std::move(v);
    }
  }
  return determinant_local(std::move(lifted), jets, 3).quadratic(0, 1);
}

/// Full Hessian via jet_hessian_entry on every pair.
template <Field F>
Matrix<typename F::Element> jet_hessian(const SymbolicMatrix& p,
                                        const PointAssignment<typename F::Element>& point,
                                        const F& field, std::span<const Exponent> vars) {
  const DerivativePattern pattern(p);
  Matrix<typename F::Element> h(vars.size(), vars.size(), field.zero());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (pattern.occurrences(vars[i]).empty()) continue;
    for (std::size_t j = i; j < vars.size(); ++j) {
      if (pattern.occurrences(vars[j]).empty()) continue;
      h(i, j) = jet_hessian_entry(p, point, field, vars[i], vars[j]);
      h(j, i) = h(i, j);
    }
  }
  return h;
}

template <class E>
struct HessianAtPoint {
  std::vector<Exponent> variables;
  Matrix<E> values;
  /// True when A was singular and the jet path produced the values.
  bool used_jets = false;
};

/// Hessian of det(P) at `point` over the chosen variables. For invertible
/// A = P(point) uses the second-order Jacobi identity
///   H_ab = det(A) [tr(B_a) tr(B_b) - tr(B_a B_b)],  B_g = A^{-1} E_g,
/// where tr(B_a B_b) = sum over occurrences (r1,c1) of a and (r2,c2) of b
/// of inv(c2,r1) inv(c1,r2). Singular A falls back to jets. Rows and columns
/// of variables that do not occur are zero.
template <Field F>
HessianAtPoint<typename F::Element> hessian_det_at(const SymbolicMatrix& p,
                                                   const PointAssignment<typename F::Element>& point,
                                                   const F& field, std::span<const Exponent> vars) {
  if (!p.is_square()) throw UsageError("hessian_det_at: matrix is not square");
  HessianAtPoint<typename F::Element> out{{vars.begin(), vars.end()},
                                          Matrix<typename F::Element>(vars.size(), vars.size(), field.zero()),
                                          false};
  const auto a = p.evaluate(point, field);
  const auto inv = inverse(a, field);
  if (!inv) {
    out.values = jet_hessian(p, point, field, vars);
    out.used_jets = true;
    return out;
  }
  const auto det = determinant(a, field);
  const DerivativePattern pattern(p);
  const auto& ainv = *inv;
  std::vector<typename F::Element> traces(vars.size(), field.zero());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (const auto& [r, c] : pattern.occurrences(vars[i])) traces[i] = traces[i] + ainv(c, r);
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto occ_a = pattern.occurrences(vars[i]);
    if (occ_a.empty()) continue;
    for (std::size_t j = i; j < vars.size(); ++j) {
      const auto occ_b = pattern.occurrences(vars[j]);
      if (occ_b.empty()) continue;
      auto cross = field.zero();
      for (const auto& [r1, c1] : occ_a) {
        for (const auto& [r2, c2] : occ_b) cross = cross + ainv(c2, r1) * ainv(c1, r2);
      }
      out.values(i, j) = det * (traces[i] * traces[j] - cross);
      out.values(j, i) = out.values(i, j);
    }
  }
  return out;
}

template <Field F>
HessianAtPoint<typename F::Element> hessian_det_at(const SymbolicMatrix& p,
                                                   const PointAssignment<typename F::Element>& point,
                                                   const F& field, VariableSet set) {
  const auto vars = variables_for(p, set);
  return hessian_det_at(p, point, field, std::span<const Exponent>(vars));
}

}  // namespace taylorhess
