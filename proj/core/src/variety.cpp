#include "taylorhess/variety/variety.hpp"

#include "taylorhess/detcalc/exact.hpp"

namespace taylorhess {

long long ambient_dimension(const TaylorParams& params) {
  return binomial(params.m + params.n, params.n) - 1;
}

long long expected_dimension(const TaylorParams& params) {
  const int n = params.n;
  return std::min(binomial(params.d + n, n) + binomial(params.e + n, n) - 2, ambient_dimension(params));
}

std::vector<Exponent> taylor_coordinates(const TaylorParams& params) {
  return monomials_in_range(params.n, 1, params.m, {Direction::kIncreasing, Direction::kDecreasing});
}

std::string to_string(HypersurfaceVerdict v) {
  switch (v) {
    case HypersurfaceVerdict::kNonDefectiveHypersurface:
      return "non-defective-hypersurface";
    case HypersurfaceVerdict::kNonDefective:
      return "non-defective";
    case HypersurfaceVerdict::kDefective:
      return "defective";
  }
  return "unknown";
}

HypersurfaceReport nondefective_hypersurface_check(const TaylorParams& params, int trials,
                                                   std::uint64_t seed, std::span<const u64> primes,
                                                   int dimension_trials) {
  if (trials < 1) throw UsageError("nondefective_hypersurface_check: need at least one trial");
  if (primes.empty()) throw UsageError("nondefective_hypersurface_check: empty prime list");
  const auto shape = pade_shape(params);
  HypersurfaceReport report;
  report.params = params;
  report.rows = shape.rows;
  report.cols = shape.cols;
  report.square = shape.square;
  report.expected_dimension = expected_dimension(params);
  report.ambient_dimension = ambient_dimension(params);

  const PrimeField rank_field(primes[0]);
  report.actual_dimension = actual_dimension(params, dimension_trials, rank_field, derive_seed(seed, 1000));

  if (shape.square) {
    const auto p = pade_matrix(params);
    for (int t = 0; t < trials; ++t) {
      const PrimeField field(primes[static_cast<std::size_t>(t) % primes.size()]);
      const auto point = random_point(p.ambient(), field, derive_seed(seed, static_cast<std::uint64_t>(t)));
      ++report.det_trials;
      if (!field.is_zero(det_modp(p.evaluate(point, field)))) ++report.det_nonzero;
    }
  }

  const bool nondefective = report.actual_dimension == report.expected_dimension;
  if (!nondefective) {
    report.verdict = HypersurfaceVerdict::kDefective;
  } else if (report.square && report.det_certified_nonzero() &&
             report.actual_dimension == report.ambient_dimension - 1) {
    report.verdict = HypersurfaceVerdict::kNonDefectiveHypersurface;
  } else {
    report.verdict = HypersurfaceVerdict::kNonDefective;
  }
  return report;
}

std::vector<SquareCase> square_family(int e_max) {
  if (e_max < 1) throw UsageError("square_family: e_max must be at least 1");
  std::vector<SquareCase> out;
  for (int e = 1; e <= e_max; ++e) {
    const int twice_d = (e + 1) * (e + 2) / 2 - 5;
    if (twice_d < 0 || twice_d % 2 != 0) continue;
    const int d = twice_d / 2;
    if (d >= e) out.push_back({d, e, d + 2});
  }
  return out;
}

}  // namespace taylorhess
