#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "taylorhess/detcalc/derivatives.hpp"
#include "taylorhess/detcalc/exact.hpp"
#include "taylorhess/detcalc/expand.hpp"
#include "taylorhess/pade/pade.hpp"

namespace taylorhess {
namespace {

const PrimeField kF(kDefaultPrimes[0]);
const RationalField kQ;

Matrix<Fp> fp_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  Matrix<Fp> m(rows.size(), rows.begin()->size(), kF.zero());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long long v : r) m(i, j++) = kF.from_int(v);
    ++i;
  }
  return m;
}

template <class F>
Matrix<typename F::Element> random_matrix(std::size_t r, std::size_t c, const F& field, std::mt19937_64& rng) {
  Matrix<typename F::Element> m(r, c, field.zero());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field.sample(rng);
  }
  return m;
}

// Random square pattern of size k over variables Exponent{0..pool-1}.
SymbolicMatrix random_pattern(std::size_t k, int pool, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(-pool / 2, pool - 1);
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < k * k; ++i) {
    const int v = pick(rng);
    entries.push_back(v < 0 ? Entry() : Entry(Exponent{v}));
  }
  std::vector<Exponent> ambient;
  for (int v = 0; v < pool; ++v) ambient.push_back(Exponent{v});
  return SymbolicMatrix::pattern(k, k, std::move(entries), std::move(ambient));
}

SymbolicMatrix generic2x2() {
  return SymbolicMatrix::pattern(2, 2, {Exponent{0}, Exponent{1}, Exponent{2}, Exponent{3}});
}

TEST(DetModP, Basics) {
  EXPECT_EQ(det_modp(identity(7, kF)), kF.one());
  EXPECT_EQ(det_modp(fp_matrix({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}})), kF.zero());
  EXPECT_EQ(det_modp(fp_matrix({{1, 2}, {3, 4}})).value(), kF.modulus() - 2);
  EXPECT_THROW(det_modp(Matrix<Fp>(2, 3, kF.zero())), UsageError);
}

TEST(DetExact, Basics) {
  Matrix<Rational> ones(3, 3, Rational(1));
  EXPECT_EQ(det_exact(ones), 0);
  Matrix<Rational> diag(3, 3, Rational(0));
  diag(0, 0) = 2;
  diag(1, 1) = 3;
  diag(2, 2) = 5;
  EXPECT_EQ(det_exact(diag), 30);
  EXPECT_THROW(det_exact(Matrix<Rational>(3, 2, Rational(0))), UsageError);
}

TEST(DetExact, AgreesWithModPAndLeibniz) {
  std::mt19937_64 rng(2);
  const RationalField small(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_matrix(6, 6, small, rng);
    const Rational d = det_exact(m);
    EXPECT_EQ(reduce(d, kF), det_modp(reduce(m, kF)));
    EXPECT_EQ(d, testing::leibniz_det(m, kQ));
    Matrix<Integer> z(6, 6, Integer(0));
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) z(i, j) = m(i, j).get_num();
    }
    EXPECT_EQ(Rational(det_bareiss(z)), d);
  }
  // Genuine fractions.
  for (int trial = 0; trial < 10; ++trial) {
    Matrix<Rational> m(4, 4, Rational(0));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        m(i, j) = Rational(small.sample(rng).get_num(), 1 + (rng() % 7));
        m(i, j).canonicalize();
      }
    }
    EXPECT_EQ(det_exact(m), testing::leibniz_det(m, kQ));
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank_at(Matrix<Fp>(4, 5, kF.zero()), kF), 0u);
  EXPECT_EQ(rank_at(identity(6, kF), kF), 6u);
  std::mt19937_64 rng(4);
  const auto u = random_matrix(5, 1, kF, rng), v = random_matrix(1, 7, kF, rng);
  EXPECT_EQ(rank_at(u * v, kF), 1u);
  const auto a = random_matrix(6, 3, kF, rng), b = random_matrix(3, 6, kF, rng);
  EXPECT_EQ(rank_at(a * b, kF), 3u);
}

TEST(Adjugate, Identity) {
  std::mt19937_64 rng(6);
  const RationalField small(5);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t r : {n, n - 1, n > 1 ? n - 2 : 0}) {
      // Rank r matrices exercise the singular branches.
      auto a = random_matrix(n, r == 0 ? 1 : r, kF, rng) * random_matrix(r == 0 ? 1 : r, n, kF, rng);
      if (r == n) a = random_matrix(n, n, kF, rng);
      const auto adj = adjugate(a, kF);
      auto want = identity(n, kF);
      const Fp d = determinant(a, kF);
      for (std::size_t i = 0; i < n; ++i) want(i, i) = d;
      EXPECT_EQ(a * adj, want);
      EXPECT_EQ(adj * a, want);
    }
    const auto q = random_matrix(n, n, small, rng);
    const auto adj = adjugate(q, kQ);
    auto want = identity(n, kQ);
    for (std::size_t i = 0; i < n; ++i) want(i, i) = det_exact(q);
    EXPECT_EQ(q * adj, want);
  }
}

TEST(Derivatives, Generic2x2) {
  const auto p = generic2x2();
  const PointAssignment<Fp> point{{Exponent{0}, kF.from_int(3)},
                                  {Exponent{1}, kF.from_int(5)},
                                  {Exponent{2}, kF.from_int(7)},
                                  {Exponent{3}, kF.from_int(11)}};
  const auto grad = grad_det_at(p, point, kF);
  EXPECT_EQ(grad.at(Exponent{0}), kF.from_int(11));
  EXPECT_EQ(grad.at(Exponent{1}), kF.from_int(-7));
  const std::vector<Exponent> vars{Exponent{0}, Exponent{1}, Exponent{2}, Exponent{3}};
  const auto h = hessian_det_at(p, point, kF, std::span<const Exponent>(vars));
  EXPECT_FALSE(h.used_jets);
  EXPECT_EQ(h.values(0, 3), kF.one());
  EXPECT_EQ(h.values(0, 1), kF.zero());
  EXPECT_EQ(h.values(0, 0), kF.zero());
  EXPECT_EQ(h.values(1, 2), -kF.one());
}

TEST(Derivatives, AbsentVariable) {
  const auto p = SymbolicMatrix::pattern(2, 2, {Exponent{0}, Entry(), Entry(), Exponent{1}},
                                         {Exponent{0}, Exponent{1}, Exponent{2}});
  const PointAssignment<Fp> point{{Exponent{0}, kF.from_int(2)}, {Exponent{1}, kF.from_int(3)}, {Exponent{2}, kF.from_int(4)}};
  const auto grad = grad_det_at(p, point, kF);
  EXPECT_EQ(grad.count(Exponent{2}), 0u);
  const auto h = hessian_det_at(p, point, kF, VariableSet::kFull);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(h.values(2, i), kF.zero());
    EXPECT_EQ(h.values(i, 2), kF.zero());
  }
  EXPECT_EQ(h.values(0, 1), kF.one());
}

TEST(Derivatives, PatternReconstructs) {
  const auto p = pade_matrix({2, 5, 4, 7});
  const DerivativePattern pattern(p);
  const auto point = random_point(p.ambient(), kF, 12);
  Matrix<Fp> sum(p.rows(), p.cols(), kF.zero());
  for (const auto& g : pattern.variables()) {
    const auto e = pattern.incidence(g);
    for (std::size_t r = 0; r < p.rows(); ++r) {
      for (std::size_t c = 0; c < p.cols(); ++c) {
        ASSERT_TRUE(e(r, c) == 0 || e(r, c) == 1);
        if (e(r, c) == 1) sum(r, c) = sum(r, c) + point.at(g);
      }
    }
  }
  EXPECT_EQ(sum, p.evaluate(point, kF));
}

TEST(Jets, DeterminantOfIdentityPlusEpsilon) {
  const JetField<PrimeField> jets(kF, 1, 1);
  auto a = identity(4, jets);
  a(2, 2) = jets.variable(kF.one(), 0);
  auto d = determinant_local(a, jets, 2);
  EXPECT_EQ(d.constant(), kF.one());
  EXPECT_EQ(d.linear(0), kF.one());
  a = identity(4, jets);
  a(1, 3) = jets.variable(kF.zero(), 0);
  d = determinant_local(a, jets, 2);
  EXPECT_EQ(d, jets.one());
}

TEST(Jets, OracleAgreesOnRandomPatterns) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t k = 1 + rng() % 8;
    const auto p = random_pattern(k, static_cast<int>(2 * k), rng);
    const auto point = random_point(p.ambient(), kF, rng());
    EXPECT_EQ(grad_det_at(p, point, kF), jet_grad_det(p, point, kF));
    const auto vars = p.ambient();
    const auto h = hessian_det_at(p, point, kF, std::span<const Exponent>(vars));
    EXPECT_EQ(h.values, jet_hessian(p, point, kF, vars));
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = 0; j < vars.size(); ++j) EXPECT_EQ(h.values(i, j), h.values(j, i));
    }
  }
}

TEST(Jets, SingularPointsMatchExpansion) {
  std::mt19937_64 rng(15);
  int singular = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = 2 + rng() % 4;
    const auto p = random_pattern(k, 3, rng);  // few variables: singular values are common
    const auto vars = p.ambient();
    const auto f = expand_determinant(p, vars);
    const RationalField small(2);
    const auto point = random_point(vars, small, rng());
    std::vector<Rational> at;
    for (const auto& v : vars) at.push_back(point.at(v));
    const auto h = hessian_det_at(p, point, kQ, std::span<const Exponent>(vars));
    singular += h.used_jets ? 1 : 0;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = 0; j < vars.size(); ++j) {
        EXPECT_EQ(h.values(i, j), f.derivative(static_cast<int>(i)).derivative(static_cast<int>(j)).evaluate(at));
      }
    }
    const auto g = grad_det_at(p, point, kQ);
    for (const auto& [gamma, value] : g) {
      const auto idx = static_cast<int>(std::find(vars.begin(), vars.end(), gamma) - vars.begin());
      EXPECT_EQ(value, f.derivative(idx).evaluate(at));
    }
  }
  EXPECT_GT(singular, 0);
}

TEST(Derivatives, Pade547AgainstJets) {
  const auto p = pade_matrix({2, 5, 4, 7});
  for (std::uint64_t t = 0; t < 5; ++t) {
    const PrimeField f(kDefaultPrimes[t]);
    const auto point = random_point(p.ambient(), f, derive_seed(21, t));
    EXPECT_EQ(grad_det_at(p, point, f), jet_grad_det(p, point, f));
  }
  // Hessian entries on a sample of pairs; the full jet Hessian is exercised
  // in the acceptance run.
  const auto point = random_point(p.ambient(), kF, 5);
  const auto vars = p.ambient();
  const auto h = hessian_det_at(p, point, kF, std::span<const Exponent>(vars));
  for (std::size_t i = 3; i < vars.size(); i += 5) {
    for (std::size_t j = i; j < vars.size(); j += 7) {
      EXPECT_EQ(h.values(i, j), jet_hessian_entry(p, point, kF, vars[i], vars[j]));
    }
  }
}

TEST(Derivatives, FullModeZeroRows) {
  const auto p = pade_matrix({2, 5, 4, 7});
  const auto point = random_point(p.ambient(), kF, 77);
  const auto h = hessian_det_at(p, point, kF, VariableSet::kFull);
  ASSERT_EQ(h.variables.size(), 36u);
  for (std::size_t i = 0; i < 36; ++i) {
    bool zero_row = true;
    for (std::size_t j = 0; j < 36; ++j) zero_row = zero_row && kF.is_zero(h.values(i, j));
    EXPECT_EQ(zero_row, h.variables[i].degree() <= 1) << h.variables[i].to_string();
  }
}

TEST(Derivatives, EulerIdentity) {
  const auto p = pade_matrix({2, 5, 4, 7});
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto point = random_point(p.ambient(), kF, derive_seed(99, t));
    Fp sum = kF.zero();
    for (const auto& [gamma, fg] : grad_det_at(p, point, kF)) sum = sum + point.at(gamma) * fg;
    EXPECT_EQ(sum, kF.from_int(15) * det_modp(p.evaluate(point, kF)));
  }
}

TEST(Derivatives, FiniteDifferenceSmoke) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 5; ++trial) {
    const auto p = random_pattern(5, 8, rng);
    const RationalField small(3);
    const auto point = random_point(p.ambient(), small, rng());
    const auto grad = grad_det_at(p, point, kQ);
    std::vector<double> x;
    for (const auto& v : p.ambient()) x.push_back(point.at(v).get_d());
    auto g = [&](const std::vector<double>& y) {
      std::vector<std::vector<double>> a(5, std::vector<double>(5, 0.0));
      for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c = 0; c < 5; ++c) {
          if (p(r, c)) a[r][c] = y[static_cast<std::size_t>((*p(r, c))[0])];
        }
      }
      return testing::float_det(a);
    };
    for (const auto& [gamma, value] : grad) {
      const double fd = testing::central_difference(g, x, static_cast<std::size_t>(gamma[0]), 1e-4);
      const double exact = value.get_d();
      EXPECT_NEAR(fd, exact, 1e-6 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST(Expand, Generic2x2) {
  const auto p = generic2x2();
  const std::vector<Exponent> vars{Exponent{0}, Exponent{1}, Exponent{2}, Exponent{3}};
  const auto f = expand_determinant(p, vars);
  Polynomial<RationalField> want(kQ, 4);
  want.add_term(Exponent{1, 0, 0, 1}, Rational(1));
  want.add_term(Exponent{0, 1, 1, 0}, Rational(-1));
  EXPECT_EQ(f, want);
}

}  // namespace
}  // namespace taylorhess
