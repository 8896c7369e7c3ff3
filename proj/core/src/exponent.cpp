#include "taylorhess/algebra/exponent.hpp"

#include <numeric>
#include <sstream>

#include "taylorhess/errors.hpp"

namespace taylorhess {

Exponent::Exponent(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw UsageError("exponent parts must be non-negative");
  }
  degree_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Exponent::Exponent(std::initializer_list<int> parts) : Exponent(std::vector<int>(parts)) {}

Exponent Exponent::zero(int nvars) { return Exponent(std::vector<int>(nvars, 0)); }

Exponent Exponent::unit(int nvars, int i) {
  std::vector<int> parts(nvars, 0);
  parts.at(i) = 1;
  return Exponent(std::move(parts));
}

bool Exponent::divides(const Exponent& other) const {
  if (other.nvars() != nvars()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] > other.parts_[i]) return false;
  }
  return true;
}

Exponent Exponent::operator+(const Exponent& other) const {
  if (other.nvars() != nvars()) throw UsageError("exponent arity mismatch");
  std::vector<int> r(parts_);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += other.parts_[i];
  return Exponent(std::move(r));
}

Exponent Exponent::operator-(const Exponent& other) const {
  if (!other.divides(*this)) {
    throw DomainError("exponent difference " + to_string() + " - " + other.to_string() +
                      " is undefined");
  }
  std::vector<int> r(parts_);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= other.parts_[i];
  return Exponent(std::move(r));
}

std::string Exponent::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

}  // namespace taylorhess
