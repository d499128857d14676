#pragma once

// Cross-checks of the closed forms against brute force, callable from the
// command line. Any disagreement throws Falsification naming (q, n).

#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "rsquad/balance.hpp"
#include "rsquad/boolfun.hpp"
#include "rsquad/equiv.hpp"
#include "rsquad/error.hpp"
#include "rsquad/gf2field.hpp"
#include "rsquad/quadform.hpp"
#include "rsquad/rs_quadratic.hpp"

namespace rsquad {

/// All offset sets with largest offset exactly J, in mask order.
inline std::vector<RsQuadratic> quadratics_with_top(std::uint64_t J) {
  detail::require(J >= 1 && J <= 20, "J must be in 1..20");
  std::vector<RsQuadratic> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (J - 1)); ++m) {
    std::vector<std::uint64_t> offs;
    for (std::uint64_t i = 0; i + 1 < J; ++i)
      if ((m >> i) & 1u) offs.push_back(i + 1);
    offs.push_back(J);
    out.emplace_back(std::move(offs));
  }
  return out;
}

inline std::vector<RsQuadratic> quadratics_up_to(std::uint64_t J) {
  std::vector<RsQuadratic> out;
  for (std::uint64_t j = 1; j <= J; ++j)
    for (auto& q : quadratics_with_top(j)) out.push_back(std::move(q));
  return out;
}

namespace detail {
inline std::string who(const RsQuadratic& q, std::uint64_t n) {
  return " (q={" + q.to_string() + "}, n=" + std::to_string(n) + ")";
}
}  // namespace detail

/// Truth table and Walsh spectrum against closed_form_report and the kernel test.
inline void check_against_table(const RsQuadratic& q, std::uint64_t n, Semantics sem) {
  const AnalysisReport r = closed_form_report(q, n, sem);
  const TruthTable t = table_from_anf(q, static_cast<unsigned>(n), sem);
  const WalshSpectrum w = walsh(t);
  const std::string at = detail::who(q, n) + " [" + to_string(sem) + "]";
  detail::check(weight(t) == r.weight, "weight mismatch" + at);
  detail::check(nonlinearity(w) == r.nonlinearity, "nonlinearity mismatch" + at);
  detail::check(is_rotation_invariant(t), "table is not rotation invariant" + at);
  detail::check((weight(t) == (std::uint64_t{1} << (n - 1))) == r.balanced, "balanced flag mismatch" + at);
  // Plateaued: every nonzero |W| equals 2^(n-d).
  const std::int64_t amp = std::int64_t{1} << (n - r.d);
  for (auto x : w.values) detail::check(x == 0 || std::llabs(x) == amp, "spectrum is not plateaued" + at);
  if (sem == Semantics::orbit) {
    detail::check(is_balanced(q, n) == r.balanced, "kernel balancedness mismatch" + at);
    detail::check(r.v == v_value(q, n), "v mismatch" + at);
  }
}

struct TraceCheck {
  std::int64_t w_cube = 0;   // over GF(2)^n, ORBIT form
  std::int64_t w_field = 0;  // over GF(2^n), trace form
  bool magnitudes_agree = false;
  bool balanced_agree = false;
};

/// |W(0)| of the ORBIT form on GF(2)^n against |W(0)| of the trace form on GF(2^n).
inline TraceCheck trace_check(const RsQuadratic& q, unsigned n) {
  if (n > 16) throw CapExceeded("trace checks are capped at n=16");
  TraceCheck c;
  const TruthTable t = table_from_anf(q, n, Semantics::orbit);
  c.w_cube = static_cast<std::int64_t>(t.size()) - 2 * static_cast<std::int64_t>(weight(t));
  c.w_field = trace_walsh_zero(FieldCtx(n), q);
  c.magnitudes_agree = std::llabs(c.w_cube) == std::llabs(c.w_field);
  c.balanced_agree = (c.w_cube == 0) == (c.w_field == 0);
  return c;
}

struct VerifyCaps {
  std::uint64_t max_J = 5;
  std::uint64_t max_n = 16;
  std::uint64_t trace_J = 4;
  std::uint64_t trace_n = 14;
  std::uint64_t profile_n = 64;
  std::uint64_t classify_n = 24;
};

/// Number of individual checks run per category.
using VerifySummary = std::map<std::string, std::uint64_t>;

inline VerifySummary verify_all(const VerifyCaps& caps) {
  detail::require(caps.max_n <= kTableCap && caps.trace_n <= 16, "verify caps exceed table limits");
  VerifySummary s;
  for (const auto& q : quadratics_up_to(caps.max_J)) {
    for (std::uint64_t n = 3; n <= caps.max_n; ++n) {
      check_against_table(q, n, Semantics::orbit);
      ++s["orbit-table"];
      if (n > q.J()) {
        check_against_table(q, n, Semantics::anf);
        ++s["anf-table"];
      }
    }
    const BalanceProfile p = profile(q);
    for (std::uint64_t n = 1; n <= caps.profile_n; ++n) {
      detail::check(is_balanced_fast(p, n) == is_balanced(q, n), "profile disagrees with kernel test" + detail::who(q, n));
      ++s["profile"];
    }
    valuation_partition_check(q);
    v_period(q);
    ++s["period"];
  }
  for (const auto& q : quadratics_up_to(caps.trace_J))
    for (std::uint64_t n = 2; n <= caps.trace_n; ++n) {
      const TraceCheck c = trace_check(q, static_cast<unsigned>(n));
      detail::check(c.magnitudes_agree && c.balanced_agree, "trace correspondence fails" + detail::who(q, n));
      ++s["trace"];
    }
  for (std::uint64_t n = 3; n <= caps.classify_n; ++n) {
    classify_mrs(n);
    ++s["mrs-classes"];
  }
  return s;
}

}  // namespace rsquad
