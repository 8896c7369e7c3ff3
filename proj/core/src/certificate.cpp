#include "taylorhess/hessian/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "taylorhess/detcalc/exact.hpp"
#include "taylorhess/parallel.hpp"

namespace taylorhess {
namespace {

constexpr int kMaxResamples = 8;

void check_options(const CertifyOptions& options) {
  if (options.trials < 1) throw UsageError("certify: need at least one trial");
  if (options.primes.empty()) throw UsageError("certify: empty prime list");
}

std::string params_label(const TaylorParams& p) {
  return "det P_T for n=" + std::to_string(p.n) + ", d=" + std::to_string(p.d) +
         ", e=" + std::to_string(p.e) + ", m=" + std::to_string(p.m);
}

std::string set_label(VariableSet set) { return set == VariableSet::kFull ? "full" : "essential"; }

}  // namespace

std::string to_string(Verdict v) {
  return v == Verdict::kVanishesProbabilistic ? "vanishes-probabilistic" : "nonzero-certified";
}

std::size_t Certificate::min_corank() const {
  std::size_t best = variables;
  for (const auto& t : trials) best = std::min(best, t.corank);
  return best;
}

std::size_t Certificate::max_rank() const {
  std::size_t best = 0;
  for (const auto& t : trials) best = std::max(best, t.rank);
  return best;
}

std::uint64_t point_hash(const PointAssignment<Fp>& point) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& [gamma, value] : point) {
    for (int part : gamma.parts()) mix(static_cast<std::uint64_t>(part));
    mix(value.value());
  }
  return h;
}

void finalize(Certificate& cert) {
  const bool all_zero =
      std::all_of(cert.trials.begin(), cert.trials.end(), [](const TrialRecord& t) { return t.value == 0; });
  if (!all_zero) {
    cert.verdict = Verdict::kNonzeroCertified;
    cert.error_bound = 0.0;
    cert.log10_error_bound.reset();
    return;
  }
  cert.verdict = Verdict::kVanishesProbabilistic;
  if (cert.degree_bound == 0) {
    // A constant that vanishes at one point is zero.
    cert.error_bound = 0.0;
    cert.log10_error_bound.reset();
    return;
  }
  double log10_bound = 0.0;
  for (const auto& t : cert.trials) {
    const double ratio = static_cast<double>(cert.degree_bound) / static_cast<double>(t.prime);
    log10_bound += std::min(0.0, std::log10(ratio));
  }
  cert.log10_error_bound = log10_bound;
  cert.error_bound = std::pow(10.0, log10_bound);
}

Certificate certify_hessian_pade(const TaylorParams& params, const CertifyOptions& options) {
  check_options(options);
  const auto shape = pade_shape(params);
  if (!shape.square) {
    throw UnsupportedParameters("certify_hessian_pade: P_T is " + std::to_string(shape.rows) + " x " +
                                std::to_string(shape.cols) + ", not square, for " + params.to_string());
  }
  const auto check = nondefective_hypersurface_check(params, std::min(options.trials, 5), options.seed,
                                                     options.primes);
  if (!check.det_certified_nonzero()) {
    throw UnsupportedParameters("certify_hessian_pade: det P_T vanished at every sampled point for " +
                                params.to_string() + "; P_T appears singular");
  }

  const auto p = pade_matrix(params, options.layout);
  const auto vars = variables_for(p, options.variables);
  const std::size_t size = p.rows();

  Certificate cert;
  cert.target = params_label(params) + " [" + to_string(check.verdict) + "]";
  cert.variable_set = set_label(options.variables);
  cert.variables = vars.size();
  cert.degree_bound = vars.size() * (size >= 2 ? size - 2 : 0);
  cert.trials.resize(static_cast<std::size_t>(options.trials));

  parallel_for(cert.trials.size(), options.threads, [&](std::size_t t) {
    const PrimeField field(options.primes[t % options.primes.size()]);
    TrialRecord rec;
    rec.index = static_cast<int>(t);
    rec.seed = derive_seed(options.seed, t);
    rec.prime = field.modulus();
    auto point = random_point(p.ambient(), field, rec.seed);
    while (rec.resamples < kMaxResamples && field.is_zero(det_modp(p.evaluate(point, field)))) {
      ++rec.resamples;
      point = random_point(p.ambient(), field, derive_seed(rec.seed, static_cast<std::uint64_t>(rec.resamples)));
    }
    const auto h = hessian_det_at(p, point, field, std::span<const Exponent>(vars));
    rec.point_hash = point_hash(point);
    rec.used_jets = h.used_jets;
    rec.value = det_modp(h.values).value();
    rec.rank = rank(h.values, field);
    rec.corank = vars.size() - rec.rank;
    cert.trials[t] = rec;
  });
  finalize(cert);
  return cert;
}

std::vector<std::vector<Polynomial<RationalField>>> hessian_polynomials(const Polynomial<RationalField>& f) {
  const int n = f.nvars();
  std::vector<Polynomial<RationalField>> first;
  for (int i = 0; i < n; ++i) first.push_back(f.derivative(i));
  std::vector<std::vector<Polynomial<RationalField>>> h(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h[i].push_back(first[i].derivative(j));
  }
  return h;
}

namespace {

struct PolyHessianEvaluator {
  const std::vector<std::vector<Polynomial<RationalField>>>& h;

  Matrix<Fp> at(const PrimeField& field, const std::vector<Fp>& values) const {
    const std::size_t n = h.size();
    Matrix<Fp> out(n, n, field.zero());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) = reduce(h[i][j], field).evaluate(std::span<const Fp>(values));
      }
    }
    return out;
  }
};

PointAssignment<Fp> as_assignment(const std::vector<Fp>& values) {
  PointAssignment<Fp> point;
  const int n = static_cast<int>(values.size());
  for (int i = 0; i < n; ++i) point.emplace(Exponent::unit(n, i), values[i]);
  return point;
}

std::vector<Fp> sample_values(const PrimeField& field, int n, std::uint64_t seed) {
  std::vector<Exponent> coords;
  for (int i = 0; i < n; ++i) coords.push_back(Exponent::unit(n, i));
  const auto point = random_point(coords, field, seed);
  std::vector<Fp> values;
  for (const auto& c : coords) values.push_back(point.at(c));
  return values;
}

}  // namespace

Certificate certify_hessian_poly(const Polynomial<RationalField>& f, const CertifyOptions& options,
                                 std::string target) {
  check_options(options);
  if (!f.is_homogeneous()) throw UsageError("certify_hessian_poly: polynomial is not homogeneous");
  if (f.degree() < 2) throw UsageError("certify_hessian_poly: degree must be at least 2");
  const auto h = hessian_polynomials(f);
  const PolyHessianEvaluator eval{h};
  const auto n = static_cast<std::size_t>(f.nvars());

  Certificate cert;
  cert.target = std::move(target);
  cert.variable_set = "full";
  cert.variables = n;
  cert.degree_bound = n * static_cast<std::uint64_t>(f.degree() - 2);
  cert.trials.resize(static_cast<std::size_t>(options.trials));

  parallel_for(cert.trials.size(), options.threads, [&](std::size_t t) {
    const PrimeField field(options.primes[t % options.primes.size()]);
    TrialRecord rec;
    rec.index = static_cast<int>(t);
    rec.seed = derive_seed(options.seed, t);
    rec.prime = field.modulus();
    const auto values = sample_values(field, f.nvars(), rec.seed);
    const auto hm = eval.at(field, values);
    rec.point_hash = point_hash(as_assignment(values));
    rec.value = det_modp(hm).value();
    rec.rank = rank(hm, field);
    rec.corank = n - rec.rank;
    cert.trials[t] = rec;
  });
  finalize(cert);
  return cert;
}

std::size_t polar_image_rank(const TaylorParams& params, VariableSet set, int points, std::uint64_t seed,
                             u64 prime) {
  if (points < 1) throw UsageError("polar_image_rank: need at least one point");
  const PrimeField field(prime);
  const auto p = pade_matrix(params);
  if (!p.is_square()) throw UnsupportedParameters("polar_image_rank: P_T is not square");
  const auto vars = variables_for(p, set);
  std::size_t best = 0;
  for (int t = 0; t < points; ++t) {
    const auto point = random_point(p.ambient(), field, derive_seed(seed, static_cast<std::uint64_t>(t)));
    const auto h = hessian_det_at(p, point, field, std::span<const Exponent>(vars));
    best = std::max(best, rank(h.values, field));
  }
  return best;
}

std::size_t polar_image_rank(const Polynomial<RationalField>& f, int points, std::uint64_t seed, u64 prime) {
  if (points < 1) throw UsageError("polar_image_rank: need at least one point");
  const PrimeField field(prime);
  const auto h = hessian_polynomials(f);
  const PolyHessianEvaluator eval{h};
  std::size_t best = 0;
  for (int t = 0; t < points; ++t) {
    const auto values = sample_values(field, f.nvars(), derive_seed(seed, static_cast<std::uint64_t>(t)));
    best = std::max(best, rank(eval.at(field, values), field));
  }
  return best;
}

}  // namespace taylorhess
