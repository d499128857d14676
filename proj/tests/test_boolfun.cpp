#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rsquad/boolfun.hpp"
#include "rsquad/quadform.hpp"

using rsquad::RsQuadratic;
using rsquad::Semantics;

namespace {

std::vector<std::uint8_t> bytes(const rsquad::TruthTable& t) {
  std::vector<std::uint8_t> b(t.size());
  for (std::uint64_t v = 0; v < t.size(); ++v) b[v] = t.get(v);
  return b;
}

}  // namespace

TEST(BoolFun, TableExamples) {
  EXPECT_EQ(rsquad::weight(rsquad::table_from_anf(RsQuadratic({3}), 6, Semantics::anf)), 28u);
  const auto zero = rsquad::table_from_anf(RsQuadratic({3}), 6, Semantics::orbit);
  EXPECT_EQ(rsquad::weight(zero), 0u);
  EXPECT_EQ(rsquad::weight(rsquad::table_from_anf(RsQuadratic({1}), 3, Semantics::anf)), 4u);
  EXPECT_EQ(rsquad::weight(rsquad::table_from_anf(RsQuadratic({1}), 3, Semantics::orbit)), 4u);
  EXPECT_EQ(rsquad::weight(rsquad::table_from_anf(RsQuadratic({3}), 8, Semantics::anf)), 112u);
  EXPECT_EQ(rsquad::weight(rsquad::table_from_anf(RsQuadratic({3, 4}), 8, Semantics::anf)), 136u);
  EXPECT_EQ(rsquad::weight(rsquad::TruthTable(5)), 0u);
}

TEST(BoolFun, SmallTableAndCap) {
  const auto t = rsquad::table_from_anf(RsQuadratic({1}), 3, Semantics::anf);
  // x0x1 + x1x2 + x2x0
  EXPECT_EQ(bytes(t), (std::vector<std::uint8_t>{0, 0, 0, 1, 0, 1, 1, 1}));
  EXPECT_THROW(rsquad::TruthTable(29), rsquad::CapExceeded);
}

TEST(BoolFun, WalshExamples) {
  const auto zero = rsquad::TruthTable(4);
  const auto ws = rsquad::walsh(zero);
  EXPECT_EQ(ws.values[0], 16);
  for (std::size_t i = 1; i < ws.values.size(); ++i) EXPECT_EQ(ws.values[i], 0);
  EXPECT_EQ(rsquad::walsh(rsquad::table_from_anf(RsQuadratic({1}), 4, Semantics::anf)).max_abs(), 8);
}

TEST(BoolFun, NonlinearityExamples) {
  rsquad::PairForm lin{5, std::vector<std::uint8_t>(3, 0), true};
  EXPECT_EQ(rsquad::nonlinearity(rsquad::table_from_form(lin)), 0u);
  EXPECT_EQ(rsquad::nonlinearity(rsquad::table_from_anf(RsQuadratic({3}), 6, Semantics::anf)), 28u);
  EXPECT_EQ(rsquad::nonlinearity(rsquad::table_from_anf(RsQuadratic({1}), 4, Semantics::anf)), 4u);
}

TEST(BoolFun, AgreesWithMonomialOracle) {
  for (std::uint64_t J = 1; J <= 5; ++J)
    for (const auto& offs : oracle::offset_sets(J))
      for (unsigned n = 1; n <= 12; ++n)
        for (bool anf : {true, false}) {
          if (anf && std::any_of(offs.begin(), offs.end(), [n](std::uint64_t t) { return t % n == 0; })) continue;
          const RsQuadratic q(offs);
          const auto t = rsquad::table_from_anf(q, n, anf ? Semantics::anf : Semantics::orbit);
          const auto o = oracle::table(oracle::monomials(offs, n, anf), n);
          ASSERT_EQ(bytes(t), o) << q.to_string() << " n=" << n << (anf ? " anf" : " orbit");
        }
}

TEST(BoolFun, FwhtAgreesWithNaiveTransform) {
  for (std::uint64_t J = 1; J <= 4; ++J)
    for (const auto& offs : oracle::offset_sets(J))
      for (unsigned n = 2; n <= 8; ++n) {
        const auto t = rsquad::table_from_anf(RsQuadratic(offs), n, Semantics::orbit);
        const auto w = rsquad::walsh(t);
        const auto o = oracle::walsh_naive(bytes(t));
        for (std::size_t i = 0; i < o.size(); ++i) ASSERT_EQ(w.values[i], o[i]);
        EXPECT_EQ(rsquad::nonlinearity(w), oracle::nonlinearity_naive(bytes(t)));
      }
}

TEST(BoolFun, SpectrumProperties) {
  for (std::uint64_t J = 1; J <= 5; ++J)
    for (const auto& offs : oracle::offset_sets(J))
      for (unsigned n = 1; n <= 12; ++n) {
        const RsQuadratic q(offs);
        const auto t = rsquad::table_from_anf(q, n, Semantics::orbit);
        const auto w = rsquad::walsh(t);
        std::int64_t parseval = 0;
        for (auto x : w.values) {
          parseval += static_cast<std::int64_t>(x) * x;
          EXPECT_EQ(x % 2, 0);
        }
        EXPECT_EQ(parseval, std::int64_t{1} << (2 * n));
        EXPECT_EQ(w.values[0], static_cast<std::int64_t>(t.size()) - 2 * static_cast<std::int64_t>(rsquad::weight(t)));
        EXPECT_TRUE(rsquad::is_rotation_invariant(t));
        // Plateaued with amplitude 2^((n+v)/2).
        const std::uint64_t v = rsquad::v_value(q, n);
        ASSERT_EQ((n + v) % 2, 0u);
        const std::int64_t amp = std::int64_t{1} << ((n + v) / 2);
        for (auto x : w.values) ASSERT_TRUE(x == 0 || x == amp || x == -amp) << q.to_string() << " n=" << n;
      }
}

TEST(BoolFun, AnfAndOrbitAgreeWithoutCollisions) {
  for (std::uint64_t J = 1; J <= 5; ++J)
    for (const auto& offs : oracle::offset_sets(J))
      for (unsigned n = 3; n <= 12; ++n) {
        std::set<std::uint64_t> cls;
        bool clean = true;
        for (auto t : offs) {
          const std::uint64_t r = t % n, s = std::min(r, n - r);
          if (r == 0 || 2 * r == n || !cls.insert(s).second) clean = false;
        }
        if (!clean) continue;
        const RsQuadratic q(offs);
        EXPECT_EQ(rsquad::table_from_anf(q, n, Semantics::anf), rsquad::table_from_anf(q, n, Semantics::orbit));
      }
}

TEST(BoolFun, AnfRejectsOffsetZeroModN) {
  EXPECT_THROW(rsquad::table_from_anf(RsQuadratic({3}), 3, Semantics::anf), rsquad::DomainError);
  EXPECT_NO_THROW(rsquad::table_from_anf(RsQuadratic({3}), 3, Semantics::orbit));
}
