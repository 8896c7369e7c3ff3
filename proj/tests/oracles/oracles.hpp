#pragma once

// Test-only reference computations. Written independently of the library
// code paths they check: no monomial-order helpers, no elimination.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "taylorhess/algebra/exponent.hpp"
#include "taylorhess/algebra/polynomial.hpp"
#include "taylorhess/detcalc/matrix.hpp"

namespace taylorhess::testing {

// All exponent vectors of length n with entries in [0, bound], by odometer.
inline std::vector<std::vector<int>> all_tuples(int n, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == bound) cur[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return out;
}

inline int tuple_degree(const std::vector<int>& t) { return std::accumulate(t.begin(), t.end(), 0); }

// Monomials with lo <= degree <= hi; degrees ascending or descending, and
// inside one degree lexicographically descending (x_1^k first).
inline std::vector<std::vector<int>> brute_monomials(int n, int lo, int hi, bool degree_ascending) {
  std::vector<std::vector<int>> out;
  for (auto& t : all_tuples(n, hi)) {
    const int deg = tuple_degree(t);
    if (deg >= lo && deg <= hi) out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const int da = tuple_degree(a), db = tuple_degree(b);
    if (da != db) return degree_ascending ? da < db : da > db;
    return a > b;
  });
  return out;
}

struct BrutePade {
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> cols;
  // entries[r][c] = rho - sigma when sigma <= rho.
  std::vector<std::vector<std::optional<std::vector<int>>>> entries;
};

inline BrutePade brute_pade(int n, int d, int e, int m) {
  BrutePade p;
  p.rows = brute_monomials(n, d + 1, m, false);
  p.cols = brute_monomials(n, 0, e, true);
  for (const auto& rho : p.rows) {
    std::vector<std::optional<std::vector<int>>> row;
    for (const auto& sigma : p.cols) {
      std::vector<int> diff(rho.size());
      bool ok = true;
      for (std::size_t i = 0; i < rho.size(); ++i) {
        diff[i] = rho[i] - sigma[i];
        ok = ok && diff[i] >= 0;
      }
      row.push_back(ok ? std::optional(diff) : std::nullopt);
    }
    p.entries.push_back(std::move(row));
  }
  return p;
}

// Coefficientwise convolution over every pair of terms.
template <class F>
Polynomial<F> brute_product(const Polynomial<F>& a, const Polynomial<F>& b, int order) {
  std::map<std::vector<int>, typename F::Element> acc;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      std::vector<int> sum(ea.parts().size());
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      if (tuple_degree(sum) > order) continue;
      auto it = acc.find(sum);
      if (it == acc.end()) {
        acc.emplace(sum, ca * cb);
      } else {
        it->second = it->second + ca * cb;
      }
    }
  }
  Polynomial<F> out(a.field(), a.nvars());
  for (const auto& [e, c] : acc) out.add_term(Exponent(e), c);
  return out;
}

// Leibniz expansion over all permutations.
template <class F>
typename F::Element leibniz_det(const Matrix<typename F::Element>& a, const F& field) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto total = field.zero();
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    auto term = field.one();
    for (std::size_t i = 0; i < n; ++i) term = term * a(i, perm[i]);
    if (inversions % 2 == 0) {
      total = total + term;
    } else {
      total = total - term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Floating determinant with partial pivoting; smoke-test precision only.
inline double float_det(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
    }
    if (a[piv][k] == 0.0) return 0.0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

// Central difference of g at x along coordinate i.
inline double central_difference(const std::function<double(const std::vector<double>&)>& g,
                                 std::vector<double> x, std::size_t i, double h) {
  const double x0 = x[i];
  x[i] = x0 + h;
  const double up = g(x);
  x[i] = x0 - h;
  const double down = g(x);
  return (up - down) / (2 * h);
}

}  // namespace taylorhess::testing
