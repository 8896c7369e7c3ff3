// Acceptance run: one line per criterion, exit status nonzero if any fails.
//   acceptance               run every criterion
//   acceptance --criterion N run one

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "printed_pade.hpp"
#include "taylorhess/detcalc/exact.hpp"
#include "taylorhess/detcalc/expand.hpp"
#include "taylorhess/hessian/certificate.hpp"
#include "taylorhess/hessian/relation.hpp"
#include "taylorhess/pade/column_transform.hpp"
#include "taylorhess/variety/variety.hpp"

namespace taylorhess {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

const TaylorParams k547{2, 5, 4, 7};
const TaylorParams k8510{2, 8, 5, 10};

CertifyOptions options(int trials, VariableSet set = VariableSet::kFull) {
  CertifyOptions o;
  o.trials = trials;
  o.variables = set;
  return o;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

Outcome golden_fixture() {
  const auto printed = testing::parse_printed_pade_5_4_7();
  const auto p = pade_matrix(k547);
  Outcome o;
  if (p.rows() != 15 || p.cols() != 15) return {false, "shape is not 15x15"};
  std::set<std::pair<std::size_t, std::size_t>> annotated;
  for (const auto& t : testing::printed_pade_5_4_7_typos()) {
    annotated.insert({t.row, t.col});
    if (!(p(t.row, t.col) == Entry(t.entry_law))) o.pass = false;
  }
  int agree = 0, mismatched = 0;
  for (std::size_t r = 0; r < 15; ++r) {
    for (std::size_t c = 0; c < 15; ++c) {
      if (printed[r][c] == p(r, c)) {
        ++agree;
      } else {
        ++mismatched;
        if (annotated.count({r, c}) == 0) o.pass = false;
      }
    }
  }
  o.pass = o.pass && annotated.size() <= 2;
  o.detail = std::to_string(agree) + "/225 entries equal the printed matrix; " + std::to_string(mismatched) +
             " differ, annotated: " + std::to_string(annotated.size());
  return o;
}

Outcome non_defective() {
  const auto r = nondefective_hypersurface_check(k547, 20, 1);
  Outcome o;
  o.pass = r.det_trials == 20 && r.det_nonzero == 20 && r.actual_dimension == 34 && r.expected_dimension == 34 &&
           r.verdict == HypersurfaceVerdict::kNonDefectiveHypersurface;
  o.detail = "det nonzero at " + std::to_string(r.det_nonzero) + "/" + std::to_string(r.det_trials) +
             " points; actual " + std::to_string(r.actual_dimension) + ", expected " +
             std::to_string(r.expected_dimension);
  return o;
}

Outcome defective() {
  const TaylorParams params{3, 2, 2, 3};
  const auto actual = actual_dimension(params, 3, PrimeField(), 1);
  const auto expected = expected_dimension(params);
  return {actual == 17 && expected == 18,
          "actual " + std::to_string(actual) + " < expected " + std::to_string(expected)};
}

Outcome full_hessian_547() {
  const auto cert = certify_hessian_pade(k547, options(20));
  int zeros = 0;
  std::set<u64> primes;
  for (const auto& t : cert.trials) {
    zeros += t.value == 0 ? 1 : 0;
    primes.insert(t.prime);
  }
  const double log10 = cert.log10_error_bound.value_or(0.0);
  // Reference bound (36*13/p)^20 with the smallest prime used.
  const double ref = 20 * std::log10(36.0 * 13.0 / static_cast<double>(*primes.begin()));
  Outcome o;
  o.pass = cert.variables == 36 && zeros == 20 && primes.size() > 1 &&
           cert.verdict == Verdict::kVanishesProbabilistic && log10 <= ref + 1e-9 && log10 < -300.0;
  std::ostringstream s;
  s << "36x36 Hessian det zero at " << zeros << "/20 points over " << primes.size()
    << " primes; log10 error bound " << log10;
  o.detail = s.str();
  return o;
}

Outcome second_square_case() {
  const auto family = square_family(5);
  const bool listed = family.size() == 2 && family[1] == SquareCase{8, 5, 10};
  const auto check = nondefective_hypersurface_check(k8510, 20, 1);
  const auto cert = certify_hessian_pade(k8510, options(20));
  Outcome o;
  o.pass = listed && check.rows == 21 && check.verdict == HypersurfaceVerdict::kNonDefectiveHypersurface &&
           cert.verdict == Verdict::kVanishesProbabilistic && cert.trials.size() == 20;
  o.detail = std::to_string(check.rows) + "x" + std::to_string(check.cols) + ", " + to_string(check.verdict) +
             ", full-mode Hessian " + to_string(cert.verdict);
  return o;
}

Outcome relation_identity() {
  Outcome o;
  std::vector<std::string> parts;
  for (const auto& params : {k547, k8510}) {
    const auto p = pade_matrix(params);
    const auto cols = relation_cols(params);
    const auto rows = relation_rows(params);
    int zero_residual = 0, rank_ok = 0, detected = 0;
    std::size_t max_rank = 0;
    for (std::uint64_t t = 0; t < 50; ++t) {
      const PrimeField f(kDefaultPrimes[t % kDefaultPrimes.size()]);
      const auto point = random_point(p.ambient(), f, derive_seed(600, t));
      auto grad = grad_det_at(p, point, f);
      const auto rel = build_M(params, grad, f);
      const auto res = relation_residual(rel, point, f);
      bool zero = true;
      for (const auto& v : res) zero = zero && f.is_zero(v);
      zero_residual += zero ? 1 : 0;
      const auto r = rank(rel.values, f);
      max_rank = std::max(max_rank, r);
      rank_ok += (r < cols.size()) ? 1 : 0;
      // Mutation: bump one gradient entry that M uses.
      const Exponent victim = rows[t % rows.size()].alpha + cols[(7 * t) % cols.size()];
      grad.at(victim) = grad.at(victim) + f.one();
      detected += relation_residual(build_M(params, grad, f), point, f) != res ? 1 : 0;
    }
    const bool ok = zero_residual == 50 && rank_ok == 50 && detected >= 49;
    o.pass = o.pass && ok;
    parts.push_back("(" + std::to_string(params.d) + "," + std::to_string(params.e) + "," +
                    std::to_string(params.m) + "): residual zero " + std::to_string(zero_residual) +
                    "/50, rank < " + std::to_string(cols.size()) + " at " + std::to_string(rank_ok) +
                    "/50 (max " + std::to_string(max_rank) + "), mutation detected " + std::to_string(detected) +
                    "/50");
  }
  o.detail = join(parts);
  return o;
}

Outcome column_invariance() {
  const auto p = pade_matrix(k547);
  int equal = 0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const PrimeField f(kDefaultPrimes[t % kDefaultPrimes.size()]);
    const auto point = random_point(p.ambient(), f, derive_seed(700, t));
    const auto lambda = random_lambda(p, f, derive_seed(701, t));
    equal += det_modp(column_transform(p, lambda, point, f)) == det_modp(p.evaluate(point, f)) ? 1 : 0;
  }
  return {equal == 20, "det(P') = det(P) at " + std::to_string(equal) + "/20 (point, lambda) pairs"};
}

Polynomial<RationalField> poly(int n, std::initializer_list<std::pair<Exponent, long>> terms) {
  Polynomial<RationalField> p(RationalField(), n);
  for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
  return p;
}

Outcome fixture_controls() {
  const auto perazzo = poly(5, {{{1, 0, 0, 2, 0}, 1}, {{0, 1, 0, 1, 1}, 1}, {{0, 0, 1, 0, 2}, 1}});
  const auto general = poly(7, {{{1, 0, 0, 2, 0, 0, 0}, 1},
                                {{0, 1, 0, 1, 1, 0, 0}, 1},
                                {{0, 0, 1, 0, 2, 0, 0}, 1},
                                {{0, 0, 0, 0, 0, 3, 0}, 1},
                                {{0, 0, 0, 0, 0, 0, 3}, 1}});
  const auto fermat = poly(3, {{{3, 0, 0}, 1}, {{0, 3, 0}, 1}, {{0, 0, 3}, 1}});
  std::mt19937_64 rng(800);
  Polynomial<RationalField> dense(RationalField(), 4);
  for (const auto& g : monomials_of_degree(4, 3, Direction::kDecreasing)) {
    dense.add_term(g, Rational(1 + static_cast<long>(rng() % 50)));
  }
  const auto v1 = certify_hessian_poly(perazzo, options(20)).verdict;
  const auto v2 = certify_hessian_poly(general, options(20)).verdict;
  const auto v3 = certify_hessian_poly(fermat, options(20)).verdict;
  const auto v4 = certify_hessian_poly(dense, options(20)).verdict;
  return {v1 == Verdict::kVanishesProbabilistic && v2 == Verdict::kVanishesProbabilistic &&
              v3 == Verdict::kNonzeroCertified && v4 == Verdict::kNonzeroCertified,
          "Perazzo " + to_string(v1) + ", generalized Perazzo " + to_string(v2) + ", Fermat " + to_string(v3) +
              ", dense cubic " + to_string(v4)};
}

Outcome oracle_equivalence() {
  const PrimeField f;
  std::mt19937_64 rng(900);
  int pattern_ok = 0;
  for (int t = 0; t < 25; ++t) {
    const std::size_t k = 1 + rng() % 8;
    const int pool = static_cast<int>(2 * k);
    std::uniform_int_distribution<int> pick(-pool / 2, pool - 1);
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < k * k; ++i) {
      const int v = pick(rng);
      entries.push_back(v < 0 ? Entry() : Entry(Exponent{v}));
    }
    std::vector<Exponent> ambient;
    for (int v = 0; v < pool; ++v) ambient.push_back(Exponent{v});
    const auto p = SymbolicMatrix::pattern(k, k, std::move(entries), ambient);
    const auto point = random_point(ambient, f, rng());
    const bool grad_ok = grad_det_at(p, point, f) == jet_grad_det(p, point, f);
    const bool hess_ok =
        hessian_det_at(p, point, f, std::span<const Exponent>(ambient)).values == jet_hessian(p, point, f, ambient);
    pattern_ok += grad_ok && hess_ok ? 1 : 0;
  }
  const auto p = pade_matrix(k547);
  int pade_ok = 0;
  for (std::uint64_t t = 0; t < 5; ++t) {
    const auto point = random_point(p.ambient(), f, derive_seed(901, t));
    const auto vars = p.ambient();
    const bool grad_ok = grad_det_at(p, point, f) == jet_grad_det(p, point, f);
    const bool hess_ok =
        hessian_det_at(p, point, f, std::span<const Exponent>(vars)).values == jet_hessian(p, point, f, vars);
    pade_ok += grad_ok && hess_ok ? 1 : 0;
  }
  int euler_ok = 0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto point = random_point(p.ambient(), f, derive_seed(902, t));
    Fp sum = f.zero();
    for (const auto& [gamma, fg] : grad_det_at(p, point, f)) sum = sum + point.at(gamma) * fg;
    euler_ok += sum == f.from_int(15) * det_modp(p.evaluate(point, f)) ? 1 : 0;
  }
  return {pattern_ok == 25 && pade_ok == 5 && euler_ok == 20,
          "patterns " + std::to_string(pattern_ok) + "/25, (2,5,4,7) points " + std::to_string(pade_ok) +
              "/5, Euler identity " + std::to_string(euler_ok) + "/20"};
}

Outcome cone_case() {
  const TaylorParams params{2, 1, 1, 2};
  const auto pade_verdict = certify_hessian_pade(params, options(20)).verdict;
  const auto p = pade_matrix(params);
  const auto f = expand_determinant(p, p.ambient());
  const auto poly_verdict = certify_hessian_poly(f, options(20)).verdict;
  return {pade_verdict == Verdict::kVanishesProbabilistic && poly_verdict == pade_verdict,
          "Padé path " + to_string(pade_verdict) + ", expanded cubic " + to_string(poly_verdict)};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "Padé matrix golden fixture (2,5,4,7)", 1.0, golden_fixture},
      {2, "non-defective hypersurface (2,5,4,7)", 5.0, non_defective},
      {3, "defectivity (3,2,2,3)", 5.0, defective},
      {4, "full-mode Hessian vanishes (2,5,4,7)", 60.0, full_hessian_547},
      {5, "second square case (2,8,5,10)", 300.0, second_square_case},
      {6, "relation identity M c = 0 and rank bound", 600.0, relation_identity},
      {7, "column-operation invariance (2,5,4,7)", 600.0, column_invariance},
      {8, "fixture controls", 5.0, fixture_controls},
      {9, "Jacobi formulas vs jet oracle, Euler identity", 600.0, oracle_equivalence},
      {10, "cone case (2,1,1,2) cross-path agreement", 600.0, cone_case},
  };
  return all;
}

bool run_one(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < c.limit_seconds;
  const bool pass = o.pass && in_time;
  std::printf("criterion %2d %s  %s: %s (%.2f s, limit %.0f s%s)\n", c.id, pass ? "PASS" : "FAIL", c.title,
              o.detail.c_str(), secs, c.limit_seconds, in_time ? "" : ", exceeded");
  std::fflush(stdout);
  return pass;
}

}  // namespace
}  // namespace taylorhess

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  bool all_pass = true;
  bool ran = false;
  for (const auto& c : taylorhess::criteria()) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    all_pass = taylorhess::run_one(c) && all_pass;
  }
  if (!ran) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all_pass ? 0 : 1;
}
