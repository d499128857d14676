#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rsquad/quadform.hpp"
#include "rsquad/recursion.hpp"

// Matrix addition is only needed here.
namespace rsquad {
inline IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}
}  // namespace rsquad

using rsquad::Direction;
using rsquad::IntMatrix;
using rsquad::IntPoly;
using rsquad::RecurrenceSpec;
using rsquad::RsQuadratic;
using rsquad::Semantics;

namespace {

std::vector<mpz_class> Z(const std::vector<long long>& v) {
  std::vector<mpz_class> out;
  for (auto x : v) out.emplace_back(std::to_string(x));
  return out;
}

std::vector<mpz_class> weights(const RsQuadratic& q, std::uint64_t lo, std::uint64_t hi, Semantics sem) {
  std::vector<mpz_class> out;
  for (std::uint64_t n = lo; n <= hi; ++n) out.emplace_back(std::to_string(rsquad::closed_form_report(q, n, sem).weight));
  return out;
}

/// p(M) as a matrix, Horner.
IntMatrix eval_at(const IntPoly& p, const IntMatrix& m) {
  IntMatrix acc(m.dim());
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = m * acc + IntMatrix::identity(m.dim()).scaled(p.coeffs()[k]);
  return acc;
}

}  // namespace

TEST(Recursion, RulesCoreRows) {
  const IntMatrix r = rsquad::rules_core(3);
  const std::vector<std::vector<long>> rows{{1, 0, 0, 0, 1, 0, 0, 0},  {1, 0, 0, 0, -1, 0, 0, 0}, {0, 1, 0, 0, 0, 1, 0, 0},
                                            {0, 1, 0, 0, 0, -1, 0, 0}, {0, 0, 1, 0, 0, 0, 1, 0},  {0, 0, 1, 0, 0, 0, -1, 0},
                                            {0, 0, 0, 1, 0, 0, 0, 1},  {0, 0, 0, 1, 0, 0, 0, -1}};
  EXPECT_EQ(r, IntMatrix::from_rows(rows));
}

TEST(Recursion, BorderedMatrix) {
  EXPECT_EQ(rsquad::rules_matrix(1), IntMatrix::from_rows({{1, 1, 0}, {1, -1, 0}, {0, 1, 2}}));
  EXPECT_EQ(rsquad::rules_matrix(3).dim(), 9u);
  EXPECT_THROW(rsquad::rules_matrix(11), rsquad::CapExceeded);
  EXPECT_THROW(rsquad::rules_matrix(0), rsquad::DomainError);
}

TEST(Recursion, HadamardRows) {
  EXPECT_EQ(rsquad::hadamard(2), IntMatrix::from_rows({{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}));
}

TEST(Recursion, MatrixIdentities) {
  for (unsigned t = 1; t <= 6; ++t) {
    const auto rep = rsquad::rules_identities(t);
    EXPECT_TRUE(rep.r2t_is_scalar) << t;
    EXPECT_TRUE(rep.hadamard_square_is_scalar) << t;
    // Observed, not assumed: R(t)^t is exactly M(t) at these sizes.
    EXPECT_TRUE(rep.rt_equals_hadamard) << t;
  }
}

TEST(Recursion, MinimalPolynomialExamples) {
  EXPECT_EQ(rsquad::minimal_polynomial(rsquad::rules_matrix(3)).to_string(), "x^7 - 2x^6 - 8x + 16");
  EXPECT_EQ(rsquad::minimal_polynomial(rsquad::rules_matrix(1)).to_string(), "x^3 - 2x^2 - 2x + 4");
  EXPECT_EQ(rsquad::minimal_polynomial(IntMatrix::identity(5)).to_string(), "x - 1");
  EXPECT_EQ(rsquad::minimal_polynomial(IntMatrix(3)).to_string(), "x");
}

TEST(Recursion, MinimalPolynomialAnnihilatesAndIsMinimal) {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 40; ++it) {
    const std::size_t d = 1 + rng() % 6;
    IntMatrix m(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m.at(i, j) = static_cast<long>(rng() % 5) - 2;
    // Repeat a block to force a nontrivial minimal polynomial.
    IntMatrix big(2 * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) big.at(i, j) = big.at(d + i, d + j) = m.at(i, j);
    for (const IntMatrix* x : {&m, &big}) {
      const IntPoly p = rsquad::minimal_polynomial(*x);
      EXPECT_EQ(p.coeffs().back(), 1);
      EXPECT_EQ(eval_at(p, *x), IntMatrix(x->dim()));
      EXPECT_LE(p.degree(), d);
    }
    EXPECT_EQ(rsquad::minimal_polynomial(m), rsquad::minimal_polynomial(big));
  }
}

TEST(Recursion, MrsPolynomialMatchesMinimalPolynomial) {
  EXPECT_EQ(rsquad::mrs_recursion_poly(3).to_string(), "x^7 - 2x^6 - 8x + 16");
  EXPECT_EQ(rsquad::mrs_recursion_poly(1).to_string(), "x^3 - 2x^2 - 2x + 4");
  for (unsigned t = 1; t <= 8; ++t) {
    const IntPoly p = rsquad::minimal_polynomial(rsquad::rules_matrix(t));
    EXPECT_EQ(p, rsquad::mrs_recursion_poly(t)) << t;
    EXPECT_NE(p.coeff(0), 0);
    // (x - 2)(x^(2t) - 2^t)
    std::vector<mpz_class> f(2 * t + 1, 0);
    f[0] = -(mpz_class(1) << t);
    f[2 * t] = 1;
    EXPECT_EQ(p, IntPoly(Z({-2, 1})) * IntPoly(f));
  }
}

TEST(Recursion, MrsWeightsSatisfyRecurrence) {
  for (unsigned t = 1; t <= 6; ++t) {
    const RecurrenceSpec s = rsquad::mrs_recurrence(t);
    EXPECT_EQ(s.valid_from, 2 * static_cast<std::int64_t>(t) + 1);
    const std::uint64_t lo = 2 * t + 1, hi = 2 * t + 40;
    const auto w = weights(RsQuadratic({t}), lo, std::min<std::uint64_t>(hi, 64), Semantics::anf);
    for (std::int64_t n = static_cast<std::int64_t>(lo + s.order()); n < static_cast<std::int64_t>(lo + w.size()); ++n)
      EXPECT_TRUE(s.holds_at(w, static_cast<std::int64_t>(lo), n)) << "t=" << t << " n=" << n;
  }
}

TEST(Recursion, FitPairThreeFour) {
  const auto w = weights(RsQuadratic({3, 4}), 9, 42, Semantics::orbit);
  const RecurrenceSpec s = rsquad::fit_recurrence(w, 9);
  EXPECT_EQ(s.order(), 15u);
  EXPECT_EQ(s.coeffs, Z({2, 0, 0, 0, 0, 0, 16, -32, 0, 0, 0, 0, 0, -128, 256}));
  EXPECT_EQ(s.to_string(), "u(n) = 2u(n-1) + 16u(n-7) - 32u(n-8) - 128u(n-14) + 256u(n-15)");
  EXPECT_EQ(s.valid_from, 9);
  const std::vector<mpz_class> seed(w.begin(), w.begin() + 15);
  EXPECT_EQ(rsquad::extend(s, seed, Direction::backward, 8), Z({0, 2, 6, 12, 20, 32, 0, 112}));
  // The extension disagrees with the actual weight 136 at n = 8.
  EXPECT_EQ(rsquad::closed_form_report(RsQuadratic({3, 4}), 8, Semantics::anf).weight, 136u);
}

TEST(Recursion, FitTripleOneTwoThree) {
  const auto w = weights(RsQuadratic({1, 2, 3}), 7, 28, Semantics::orbit);
  const RecurrenceSpec s = rsquad::fit_recurrence(w, 7);
  EXPECT_EQ(s.order(), 9u);
  EXPECT_EQ(s.coeffs, Z({2, 0, 0, 4, -8, 0, 0, -16, 32}));
  const std::vector<mpz_class> seed(w.begin(), w.begin() + 9);
  EXPECT_EQ(rsquad::extend(s, seed, Direction::backward, 6), Z({1, 2, 4, 0, 16, 32}));
}

TEST(Recursion, FitNeedsEnoughTerms) {
  const auto w = weights(RsQuadratic({3, 4}), 9, 39, Semantics::orbit);
  EXPECT_THROW(rsquad::fit_recurrence(w, 9), rsquad::InsufficientData);
  EXPECT_THROW(rsquad::fit_recurrence(Z({0, 0, 0, 0, 0, 0}), 0), rsquad::InsufficientData);
}

TEST(Recursion, FitRejectsFractionalRelation) {
  // 4096, 2048, ...: u(n) = u(n-1)/2
  std::vector<mpz_class> t;
  for (int k = 0; k < 12; ++k) t.push_back(mpz_class(1) << (12 - k));
  EXPECT_THROW(rsquad::fit_recurrence(t, 0), rsquad::InconsistentData);
}

TEST(Recursion, FitConstantSequence) {
  const RecurrenceSpec s = rsquad::fit_recurrence(Z({1, 1, 1, 1, 1, 1, 1, 1}), 0);
  EXPECT_EQ(s.order(), 1u);
  EXPECT_EQ(s.coeffs, Z({1}));
}

TEST(Recursion, FitRoundTrip) {
  std::mt19937_64 rng(1234);
  int tried = 0;
  while (tried < 60) {
    const std::size_t r = 1 + rng() % 10;
    RecurrenceSpec spec;
    for (std::size_t j = 0; j < r; ++j) spec.coeffs.emplace_back(static_cast<long>(rng() % 7) - 3);
    if (spec.coeffs.back() == 0) spec.coeffs.back() = 1;
    std::vector<mpz_class> seed;
    for (std::size_t j = 0; j < r; ++j) seed.emplace_back(static_cast<long>(rng() % 21) - 10);
    auto tail = rsquad::extend(spec, seed, Direction::forward, 2 * r + 4);
    std::vector<mpz_class> seq = seed;
    seq.insert(seq.end(), tail.begin(), tail.end());
    // Skip degenerate draws whose linear complexity is below r.
    RecurrenceSpec got;
    try {
      got = rsquad::fit_recurrence(seq, 5);
    } catch (const rsquad::InsufficientData&) {
      continue;
    }
    ++tried;
    EXPECT_LE(got.order(), r);
    if (got.order() == r) {
      EXPECT_EQ(got.coeffs, spec.coeffs);
      EXPECT_EQ(got.valid_from, 5);
    }
    for (std::int64_t n = got.valid_from + static_cast<std::int64_t>(got.order()); n < 5 + static_cast<std::int64_t>(seq.size()); ++n)
      EXPECT_TRUE(got.holds_at(seq, 5, n));
  }
}

TEST(Recursion, TrailingZeroCoefficientsMoveValidFrom) {
  // 5, 7, then doubling: u(n) = 2u(n-1) holds from the second term on.
  const RecurrenceSpec s = rsquad::fit_recurrence(Z({5, 7, 14, 28, 56, 112, 224, 448}), 3);
  EXPECT_EQ(s.order(), 1u);
  EXPECT_EQ(s.coeffs, Z({2}));
  EXPECT_EQ(s.valid_from, 4);
}

TEST(Recursion, ExtendForwardMrs) {
  const RecurrenceSpec s = rsquad::mrs_recurrence(3);
  EXPECT_EQ(rsquad::extend(s, Z({112, 256, 480, 1024, 1792, 4096, 8064}), Direction::forward, 0).size(), 0u);
  const auto w = weights(RsQuadratic({3}), 7, 13, Semantics::anf);
  EXPECT_EQ(rsquad::extend(s, w, Direction::forward, 2), Z({8064, 16384}));
  EXPECT_THROW(rsquad::extend(s, Z({1, 2}), Direction::forward, 1), rsquad::DomainError);
}

TEST(Recursion, ExtendBackwardNeedsDivisibility) {
  RecurrenceSpec s;
  s.coeffs = Z({0, 2});  // u(n) = 2u(n-2)
  EXPECT_EQ(rsquad::extend(s, Z({4, 8}), Direction::backward, 2), Z({2, 4}));
  EXPECT_THROW(rsquad::extend(s, Z({3, 8}), Direction::backward, 2), rsquad::NonIntegralStep);
}

TEST(Recursion, CharpolyRoundTrip) {
  const IntPoly p = rsquad::mrs_recursion_poly(4);
  const RecurrenceSpec s = RecurrenceSpec::from_charpoly(p, 9);
  EXPECT_EQ(s.charpoly(), p);
  EXPECT_EQ(s.charpoly().coeff(0), -s.coeffs.back());
}

TEST(Recursion, RootModuli) {
  auto roots = rsquad::root_moduli(rsquad::mrs_recursion_poly(3));
  ASSERT_EQ(roots.size(), 7u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_LT(roots[i].dev_sqrt2, 1e-12L);
  EXPECT_LT(roots[6].dev_two, 1e-12L);
  roots = rsquad::root_moduli(IntPoly(Z({-2, 0, 1})));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(static_cast<double>(roots[0].root.real()), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(static_cast<double>(roots[1].root.real()), -std::sqrt(2.0), 1e-12);
  roots = rsquad::root_moduli(IntPoly(Z({0, 0, 1})));
  EXPECT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].modulus, 0);
}
