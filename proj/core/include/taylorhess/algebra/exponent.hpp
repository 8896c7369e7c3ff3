#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace taylorhess {

/// Multi-index gamma of a monomial x^gamma = x_1^gamma_1 ... x_n^gamma_n.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::vector<int> parts);
  Exponent(std::initializer_list<int> parts);

  static Exponent zero(int nvars);
  /// The exponent of x_i (0-based).
  static Exponent unit(int nvars, int i);

  int nvars() const { return static_cast<int>(parts_.size()); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::span<const int> parts() const { return parts_; }

  /// Componentwise this <= other.
  bool divides(const Exponent& other) const;

  Exponent operator+(const Exponent& other) const;
  /// Componentwise difference; throws DomainError unless other <= *this.
  Exponent operator-(const Exponent& other) const;

  /// "(2,4)".
  std::string to_string() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent& a, const Exponent& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

}  // namespace taylorhess
