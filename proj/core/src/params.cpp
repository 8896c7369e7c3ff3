#include "taylorhess/params.hpp"

#include <sstream>

#include "taylorhess/errors.hpp"

namespace taylorhess {

void TaylorParams::validate() const {
  if (n < 1) throw UsageError("n must be at least 1");
  if (d < 0 || e < 0) throw UsageError("d and e must be non-negative");
  if (m <= d) throw UsageError("m must exceed d (empty row window " + to_string() + ")");
}

std::string TaylorParams::to_string() const {
  std::ostringstream os;
  os << "(n=" << n << ", d=" << d << ", e=" << e << ", m=" << m << ")";
  return os.str();
}

long long binomial(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace taylorhess
