#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taylorhess/algebra/prime_field.hpp"
#include "taylorhess/algebra/random.hpp"
#include "taylorhess/algebra/rational.hpp"
#include "taylorhess/detcalc/derivatives.hpp"
#include "taylorhess/pade/pade.hpp"
#include "taylorhess/params.hpp"
#include "taylorhess/variety/variety.hpp"

namespace taylorhess {

enum class Verdict { kVanishesProbabilistic, kNonzeroCertified };

/// "vanishes-probabilistic" / "nonzero-certified".
std::string to_string(Verdict v);

struct TrialRecord {
  int index = 0;
  std::uint64_t seed = 0;
  u64 prime = 0;
  std::uint64_t point_hash = 0;
  /// Hessian determinant at the point, in [0, prime).
  u64 value = 0;
  std::size_t rank = 0;
  std::size_t corank = 0;
  /// Fresh points drawn because P_T was singular at the first one.
  int resamples = 0;
  bool used_jets = false;
};

/// Outcome of randomized identity testing of a Hessian determinant.
///
/// A nonzero evaluation mod p proves the integer polynomial is nonzero, so
/// kNonzeroCertified is exact and carries error bound 0. kVanishesProbabilistic
/// means every trial evaluated to zero; by Schwartz-Zippel a nonzero
/// polynomial of degree D survives a trial over F_p with probability <= D/p,
/// so the error bound is prod_t min(1, D / p_t).
struct Certificate {
  std::string target;
  std::string variable_set;
  Verdict verdict = Verdict::kVanishesProbabilistic;
  std::vector<TrialRecord> trials;
  std::size_t variables = 0;
  std::uint64_t degree_bound = 0;
  /// May underflow to 0 for tiny bounds; log10_error_bound keeps the
  /// magnitude. Unset for nonzero-certified results (error bound exactly 0).
  double error_bound = 1.0;
  std::optional<double> log10_error_bound;

  std::size_t min_corank() const;
  std::size_t max_rank() const;
};

struct CertifyOptions {
  int trials = 20;
  std::uint64_t seed = 1;
  std::vector<u64> primes{kDefaultPrimes.begin(), kDefaultPrimes.end()};
  VariableSet variables = VariableSet::kFull;
  unsigned threads = 1;
  PadeLayout layout = PadeLayout::standard();
};

/// FNV-1a over (exponent parts, value) in map order.
std::uint64_t point_hash(const PointAssignment<Fp>& point);

/// Sets verdict and error bound from the trial values.
void finalize(Certificate& cert);

/// Randomized test of h_f = 0 for f = det P_T. Refuses (UnsupportedParameters)
/// when P_T is not square or det P_T vanished at every pre-check point.
/// Degree bound V (D - 2), V = number of variables, D = size of P_T.
Certificate certify_hessian_pade(const TaylorParams& params, const CertifyOptions& options);

/// Randomized test of the Hessian determinant of an explicit homogeneous
/// polynomial of degree >= 2 (UsageError otherwise), using exact formal
/// second partials. Degree bound nvars (deg f - 2).
Certificate certify_hessian_poly(const Polynomial<RationalField>& f, const CertifyOptions& options,
                                 std::string target = "polynomial");

/// Largest Hessian rank of det P_T seen over `points` random points: the
/// local rank of the polar map w -> (f_gamma).
std::size_t polar_image_rank(const TaylorParams& params, VariableSet set, int points, std::uint64_t seed,
                             u64 prime = kDefaultPrimes[0]);

/// Same for an explicit polynomial.
std::size_t polar_image_rank(const Polynomial<RationalField>& f, int points, std::uint64_t seed,
                             u64 prime = kDefaultPrimes[0]);

/// Matrix of formal second partials of f.
std::vector<std::vector<Polynomial<RationalField>>> hessian_polynomials(const Polynomial<RationalField>& f);

}  // namespace taylorhess
