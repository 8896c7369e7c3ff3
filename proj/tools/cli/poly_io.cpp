#include "poly_io.hpp"

#include <filesystem>
#include <fstream>

#include "taylorhess/errors.hpp"

namespace taylorhess::cli {
namespace {

Integer parse_integer(const nlohmann::json& v) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) != 0) throw UsageError("polynomial: bad integer '" + v.get<std::string>() + "'");
    return out;
  }
  throw UsageError("polynomial: coefficients must be integers or decimal strings");
}

}  // namespace

NamedPolynomial parse_polynomial(const nlohmann::json& doc, const std::string& fallback_name) {
  const nlohmann::json* terms = &doc;
  std::string name = fallback_name;
  int nvars = -1;
  if (doc.is_object()) {
    if (!doc.contains("terms")) throw UsageError("polynomial: object needs a \"terms\" list");
    terms = &doc.at("terms");
    if (doc.contains("name")) name = doc.at("name").get<std::string>();
    if (doc.contains("nvars")) nvars = doc.at("nvars").get<int>();
  }
  if (!terms->is_array() || terms->empty()) throw UsageError("polynomial: terms must be a non-empty list");

  const RationalField field;
  std::vector<std::pair<Exponent, Rational>> parsed;
  for (const auto& term : *terms) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_array()) {
      throw UsageError("polynomial: each term must be [exponents, numerator, denominator]");
    }
    std::vector<int> parts;
    for (const auto& x : term[0]) {
      if (!x.is_number_integer() || x.get<long long>() < 0) throw UsageError("polynomial: exponents must be non-negative integers");
      parts.push_back(x.get<int>());
    }
    if (nvars < 0) nvars = static_cast<int>(parts.size());
    if (static_cast<int>(parts.size()) != nvars) throw UsageError("polynomial: exponent vectors differ in length");
    const Integer den = parse_integer(term[2]);
    if (den == 0) throw UsageError("polynomial: zero denominator");
    Rational c(parse_integer(term[1]), den);
    c.canonicalize();
    parsed.emplace_back(Exponent(parts), c);
  }
  if (nvars < 1) throw UsageError("polynomial: need at least one variable");
  Polynomial<RationalField> poly(field, nvars);
  for (const auto& [e, c] : parsed) poly.add_term(e, c);
  return {name, poly};
}

NamedPolynomial load_polynomial(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open polynomial file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw UsageError("polynomial file '" + path + "': " + err.what());
  }
  return parse_polynomial(doc, std::filesystem::path(path).stem().string());
}

}  // namespace taylorhess::cli
