#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "taylorhess/algebra/exponent.hpp"
#include "taylorhess/algebra/field.hpp"
#include "taylorhess/algebra/random.hpp"
#include "taylorhess/detcalc/matrix.hpp"

namespace taylorhess {

/// Matrix entry before evaluation: zero, or a single coordinate variable c_gamma.
using Entry = std::optional<Exponent>;

/// Column label: the generating block index j, the position inside that
/// block, and the domain monomial sigma the column represents.
struct ColumnLabel {
  int block = 0;
  int position = 0;
  Exponent sigma;

  friend bool operator==(const ColumnLabel&, const ColumnLabel&) = default;
};

/// Matrix whose entries are Zero or Var(gamma). Immutable after construction.
class SymbolicMatrix {
 public:
  SymbolicMatrix(std::vector<Exponent> row_labels, std::vector<ColumnLabel> col_labels,
                 std::vector<Entry> entries, std::vector<Exponent> ambient);

  /// Pattern without meaningful labels (rows/cols labelled by index). The
  /// ambient coordinate list defaults to the occurring variables.
  static SymbolicMatrix pattern(std::size_t rows, std::size_t cols, std::vector<Entry> entries,
                                std::vector<Exponent> ambient = {});

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  bool is_square() const { return rows() == cols(); }

  const Entry& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  const std::vector<Exponent>& row_labels() const { return row_labels_; }
  const std::vector<ColumnLabel>& col_labels() const { return col_labels_; }

  /// Full coordinate list of the ambient space (for Padé matrices every c_gamma
  /// with |gamma| <= m), in canonical order.
  const std::vector<Exponent>& ambient() const { return ambient_; }
  /// Variables that actually occur, sorted.
  std::vector<Exponent> variables() const;

  /// The columns listed, in the given order.
  SymbolicMatrix select_columns(std::span<const std::size_t> columns) const;

  /// Entry values under an assignment; every occurring variable must be
  /// assigned (UsageError otherwise).
  template <Field F>
  Matrix<typename F::Element> evaluate(const PointAssignment<typename F::Element>& point,
                                       const F& field) const {
    Matrix<typename F::Element> a(rows(), cols(), field.zero());
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols(); ++j) {
        const Entry& ent = (*this)(i, j);
        if (!ent) continue;
        auto it = point.find(*ent);
        if (it == point.end()) throw UsageError("no value assigned to c" + ent->to_string());
        a(i, j) = it->second;
      }
    }
    return a;
  }

  /// Plain-text rendering, one row per line, entries as c_(i,j) or 0.
  std::string to_string() const;

 private:
  std::vector<Exponent> row_labels_;
  std::vector<ColumnLabel> col_labels_;
  std::vector<Entry> entries_;
  std::vector<Exponent> ambient_;
};

/// Token used for c_gamma in text output: "c_(2,4)".
std::string variable_token(const Exponent& gamma);

}  // namespace taylorhess
