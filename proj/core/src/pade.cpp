#include "taylorhess/pade/pade.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace taylorhess {

PadeShape pade_shape(const TaylorParams& params) {
  params.validate();
  const auto [n, d, e, m] = params;
  PadeShape s;
  s.rows = static_cast<std::size_t>(binomial(m + n, n) - binomial(d + n, n));
  s.cols = static_cast<std::size_t>(binomial(e + n, n));
  s.square = s.rows == s.cols;
  return s;
}

SymbolicMatrix pade_matrix(const TaylorParams& params, const PadeLayout& layout) {
  params.validate();
  const auto [n, d, e, m] = params;
  auto rows = monomials_in_range(n, d + 1, m, layout.rows);
  const auto sigmas = monomials_in_range(n, 0, e, layout.cols);

  std::vector<ColumnLabel> cols;
  std::map<int, int> next_position;
  for (const auto& sigma : sigmas) {
    const int block = m - sigma.degree();
    cols.push_back({block, next_position[block]++, sigma});
  }

  std::vector<Entry> entries;
  entries.reserve(rows.size() * cols.size());
  for (const auto& rho : rows) {
    for (const auto& col : cols) {
      entries.push_back(col.sigma.divides(rho) ? Entry(rho - col.sigma) : Entry());
    }
  }
  auto ambient = monomials_in_range(n, 0, m, {Direction::kIncreasing, Direction::kDecreasing});
  return SymbolicMatrix(std::move(rows), std::move(cols), std::move(entries), std::move(ambient));
}

SymbolicMatrix reduced_pade(const SymbolicMatrix& p) {
  if (p.cols() < 2) throw UsageError("reduced_pade: need at least two columns");
  std::vector<std::size_t> keep(p.cols() - 1);
  for (std::size_t c = 1; c < p.cols(); ++c) keep[c - 1] = c;
  return p.select_columns(keep);
}

std::vector<int> block_indices(const SymbolicMatrix& p) {
  std::vector<int> blocks;
  for (const auto& label : p.col_labels()) {
    if (std::find(blocks.begin(), blocks.end(), label.block) == blocks.end()) {
      blocks.push_back(label.block);
    }
  }
  std::sort(blocks.rbegin(), blocks.rend());
  return blocks;
}

SymbolicMatrix block_view(const SymbolicMatrix& p, int j) {
  std::vector<std::size_t> columns;
  for (std::size_t c = 0; c < p.cols(); ++c) {
    if (p.col_labels()[c].block == j) columns.push_back(c);
  }
  if (columns.empty()) {
    const auto blocks = block_indices(p);
    std::ostringstream os;
    os << "block_view: no block C_" << j;
    if (!blocks.empty()) os << " (blocks range over " << blocks.back() << ".." << blocks.front() << ")";
    throw UsageError(os.str());
  }
  return p.select_columns(columns);
}

std::string export_m2(const SymbolicMatrix& p, const TaylorParams& params) {
  std::ostringstream os;
  os << "-- Pade matrix for n=" << params.n << ", d=" << params.d << ", e=" << params.e
     << ", m=" << params.m << " (" << p.rows() << " x " << p.cols() << ")\n";
  os << "-- rows: monomials of degree " << params.d + 1 << ".." << params.m
     << "; columns: monomials of degree 0.." << params.e << "\n";
  os << "-- entry (rho, sigma) = c_(rho - sigma) when sigma <= rho, else 0\n";
  os << "R = QQ[";
  const auto& vars = p.ambient();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    os << (i ? ", " : "") << variable_token(vars[i]);
  }
  os << "];\n";
  os << "P = matrix(R, {\n";
  for (std::size_t r = 0; r < p.rows(); ++r) {
    os << "    {";
    for (std::size_t c = 0; c < p.cols(); ++c) {
      const Entry& e = p(r, c);
      os << (c ? ", " : "") << (e ? variable_token(*e) : "0");
    }
    os << "}" << (r + 1 < p.rows() ? "," : "") << "\n";
  }
  os << "    });\n";
  if (p.is_square()) {
    os << "-- nonzero at a random point certifies det(P) is not identically zero\n";
    os << "det sub(P, apply(gens R, v -> v => random(QQ)))\n";
  } else {
    os << "-- rank at a random point lower-bounds the generic rank\n";
    os << "rank sub(P, apply(gens R, v -> v => random(QQ)))\n";
  }
  return os.str();
}

}  // namespace taylorhess
