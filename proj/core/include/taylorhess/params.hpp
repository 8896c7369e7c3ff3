#pragma once

#include <string>

namespace taylorhess {

/// Parameters (n, d, e, m) of a Taylor variety: n variables, numerator degree
/// at most d, denominator degree at most e, truncation order m.
struct TaylorParams {
  int n = 2;
  int d = 0;
  int e = 0;
  int m = 1;

  /// Throws UsageError unless n >= 1, 0 <= d < m and e >= 0.
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const TaylorParams&, const TaylorParams&) = default;
};

/// Binomial coefficient C(a, b) as a 64-bit integer; 0 when b < 0 or b > a.
long long binomial(long long a, long long b);

}  // namespace taylorhess
