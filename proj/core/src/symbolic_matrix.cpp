#include "taylorhess/pade/symbolic_matrix.hpp"

#include <set>
#include <sstream>

namespace taylorhess {

SymbolicMatrix::SymbolicMatrix(std::vector<Exponent> row_labels, std::vector<ColumnLabel> col_labels,
                               std::vector<Entry> entries, std::vector<Exponent> ambient)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      entries_(std::move(entries)),
      ambient_(std::move(ambient)) {
  if (entries_.size() != row_labels_.size() * col_labels_.size()) {
    throw UsageError("symbolic matrix: entry count does not match dimensions");
  }
  if (ambient_.empty()) ambient_ = variables();
}

SymbolicMatrix SymbolicMatrix::pattern(std::size_t rows, std::size_t cols, std::vector<Entry> entries,
                                       std::vector<Exponent> ambient) {
  std::vector<Exponent> row_labels;
  for (std::size_t i = 0; i < rows; ++i) row_labels.push_back(Exponent{static_cast<int>(i)});
  std::vector<ColumnLabel> col_labels;
  for (std::size_t j = 0; j < cols; ++j) {
    col_labels.push_back({0, static_cast<int>(j), Exponent{static_cast<int>(j)}});
  }
  return SymbolicMatrix(std::move(row_labels), std::move(col_labels), std::move(entries),
                        std::move(ambient));
}

std::vector<Exponent> SymbolicMatrix::variables() const {
  std::set<Exponent> vars;
  for (const auto& e : entries_) {
    if (e) vars.insert(*e);
  }
  return {vars.begin(), vars.end()};
}

SymbolicMatrix SymbolicMatrix::select_columns(std::span<const std::size_t> columns) const {
  std::vector<ColumnLabel> labels;
  std::vector<Entry> entries;
  entries.reserve(rows() * columns.size());
  for (std::size_t c : columns) {
    if (c >= cols()) throw UsageError("select_columns: column index out of range");
    labels.push_back(col_labels_[c]);
  }
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c : columns) entries.push_back((*this)(r, c));
  }
  return SymbolicMatrix(row_labels_, std::move(labels), std::move(entries), ambient_);
}

std::string SymbolicMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) {
      const Entry& e = (*this)(r, c);
      os << (c ? " " : "") << (e ? variable_token(*e) : "0");
    }
    os << '\n';
  }
  return os.str();
}

std::string variable_token(const Exponent& gamma) { return "c_" + gamma.to_string(); }

}  // namespace taylorhess
