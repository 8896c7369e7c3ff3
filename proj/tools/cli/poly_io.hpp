#pragma once

#include <string>

#include "json.hpp"
#include "taylorhess/algebra/polynomial.hpp"
#include "taylorhess/algebra/rational.hpp"

namespace taylorhess::cli {

struct NamedPolynomial {
  std::string name;
  Polynomial<RationalField> poly;
};

/// Polynomial files are JSON: either a bare list of terms or an object
///   {"name": "...", "nvars": 5, "terms": [[[1,0,0,2,0], 1, 1], ...]}
/// Each term is [exponent vector, numerator, denominator]; numerator and
/// denominator may be integers or decimal strings. Terms with equal
/// exponents are summed.
NamedPolynomial parse_polynomial(const nlohmann::json& doc, const std::string& fallback_name);
NamedPolynomial load_polynomial(const std::string& path);

}  // namespace taylorhess::cli
