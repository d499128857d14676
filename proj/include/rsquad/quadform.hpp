#pragma once

// Exact polynomial-time analysis of an RS quadratic at a given n, without
// truth tables: circulant polar form, kernel, Dickson reduction, v-values.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsquad/bits.hpp"
#include "rsquad/error.hpp"
#include "rsquad/form.hpp"
#include "rsquad/gf2poly.hpp"
#include "rsquad/rs_quadratic.hpp"

namespace rsquad {

/// Weights are exact 64-bit integers, which bounds n for full reports.
inline constexpr std::uint64_t kReportCap = 64;

/// C is the symmetric circulant polar matrix, B its strict upper triangle, so
/// the function is x^T B x (+ x_0 + ... + x_{n-1} when `linear`).
struct FormMatrices {
  std::uint64_t n = 0;
  BitMatrix C;
  BitMatrix B;
  bool linear = false;
};

inline FormMatrices form_matrices(const PairForm& f) {
  const auto n = static_cast<std::size_t>(f.n);
  FormMatrices m{f.n, BitMatrix(n, n), BitMatrix(n, n), f.linear};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !f.pair_at((j + n - i) % n)) continue;
      m.C.set(i, j);
      if (i < j) m.B.set(i, j);
    }
  return m;
}

inline FormMatrices form_matrices(const RsQuadratic& q, std::uint64_t n, Semantics sem = Semantics::orbit) {
  return form_matrices(pair_form(q, n, sem));
}

inline bool eval_form(const FormMatrices& m, const BitVec& x) {
  bool acc = x.dot(m.B * x);
  if (m.linear) acc ^= (x.popcount() & 1u);
  return acc;
}

/// deg gcd(x^n + 1, A(x)); always the trace-side (ORBIT) plateau parameter.
inline std::uint64_t v_value(const RsQuadratic& q, std::uint64_t n) {
  detail::require(n >= 1, "n must be positive");
  const Gf2Poly a = a_polynomial(q);
  const Gf2Poly xn1 = powmod(Gf2Poly::monomial(1), n, a) + Gf2Poly::one();
  if (xn1.is_zero()) return a.deg();
  return gcd(a, xn1).deg();
}

struct VPeriod {
  std::uint64_t period = 0;
  std::uint64_t start = 0;             // n of values[0], i.e. 2J + 1
  std::vector<std::uint64_t> values;   // v(start), ..., v(start + period - 1)

  std::uint64_t at(std::uint64_t n) const {
    return values[static_cast<std::size_t>((n % period + period - start % period) % period)];
  }
};

/// One full period of n -> v(n), verified for a unique maximum 2J per period
/// and the reflection symmetry v(K + r) = v(K - r).
inline VPeriod v_period(const RsQuadratic& q) {
  const Gf2Poly a = a_polynomial(q);
  VPeriod out{dividing_period(a), 2 * q.J() + 1, {}};
  out.values.reserve(static_cast<std::size_t>(out.period));
  for (std::uint64_t k = 0; k < out.period; ++k) out.values.push_back(v_value(q, out.start + k));

  const std::string who = " for q={" + q.to_string() + "}";
  std::size_t maxima = 0;
  for (auto v : out.values) {
    detail::check(v <= 2 * q.J(), "v-value exceeds 2J" + who);
    if (v == 2 * q.J()) ++maxima;
  }
  detail::check(maxima == 1, "the maximum 2J is not unique in a period" + who);
  detail::check(out.at(out.period) == 2 * q.J(), "v(K) != 2J" + who);
  for (std::uint64_t r = 1; r < out.period; ++r)
    detail::check(out.at(out.period + r) == out.at(out.period - r), "period is not symmetric" + who);
  for (std::uint64_t d = 1; d < out.period; ++d) {
    if (out.period % d) continue;
    bool periodic = true;
    for (std::uint64_t k = 0; k < out.period && periodic; ++k)
      periodic = out.values[static_cast<std::size_t>(k)] == out.values[static_cast<std::size_t>((k + d) % out.period)];
    detail::check(!periodic, "period is not minimal" + who);
  }
  return out;
}

struct KernelParity {
  std::vector<BitVec> kernel;  // basis of ker C
  std::size_t v0_dim = 0;      // parity-preserving subspace
  bool v1_nonempty = false;    // some parity-reversing vector exists
};

inline KernelParity kernel_and_parity(const FormMatrices& m) {
  KernelParity out;
  out.kernel = null_space(m.C);
  // On ker C the form is additive, so it vanishes there iff it vanishes on a basis.
  for (const auto& k : out.kernel)
    if (eval_form(m, k)) out.v1_nonempty = true;
  out.v0_dim = out.kernel.size() - (out.v1_nonempty ? 1 : 0);
  return out;
}

inline KernelParity kernel_and_parity(const RsQuadratic& q, std::uint64_t n, Semantics sem = Semantics::orbit) {
  return kernel_and_parity(form_matrices(q, n, sem));
}

inline bool is_balanced(const RsQuadratic& q, std::uint64_t n, Semantics sem = Semantics::orbit) {
  const auto kp = kernel_and_parity(q, n, sem);
  detail::check(kp.v1_nonempty == ((kp.v0_dim % 2) != (n % 2)),
                "parity of dim V0 disagrees with balancedness at n=" + std::to_string(n));
  return kp.v1_nonempty;
}

enum class DicksonB { balanced, zero, one };

inline std::string to_string(DicksonB b) {
  switch (b) {
    case DicksonB::balanced: return "balanced";
    case DicksonB::zero: return "0";
    case DicksonB::one: return "1";
  }
  return "?";
}

struct DicksonForm {
  std::uint64_t d = 0;  // Dickson rank, half the rank of C
  DicksonB b = DicksonB::zero;
  std::vector<std::pair<BitVec, BitVec>> symplectic_pairs;
  std::vector<BitVec> radical;  // basis of ker C
};

/// Symplectic Gram-Schmidt on the polar form. After it, f is a sum of
/// x_{2i-1} x_{2i}-type hyperbolic pairs plus a linear functional on the radical;
/// in the unbalanced case the constant b is the Arf invariant sum f(u_i) f(w_i).
inline DicksonForm dickson_reduce(const FormMatrices& m) {
  const auto n = static_cast<std::size_t>(m.n);
  std::vector<BitVec> pool;
  pool.reserve(n);
  for (std::size_t i = n; i-- > 0;) pool.push_back(BitVec::unit(n, i));

  DicksonForm out;
  while (!pool.empty()) {
    BitVec u = std::move(pool.back());
    pool.pop_back();
    const BitVec cu = m.C * u;
    std::size_t j = 0;
    while (j < pool.size() && !pool[j].dot(cu)) ++j;
    if (j == pool.size()) {
      out.radical.push_back(std::move(u));
      continue;
    }
    BitVec w = std::move(pool[j]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    const BitVec cw = m.C * w;
    for (auto& z : pool) {
      const bool zw = z.dot(cw), zu = z.dot(cu);
      if (zw) z ^= u;
      if (zu) z ^= w;
    }
    out.symplectic_pairs.emplace_back(std::move(u), std::move(w));
  }
  out.d = out.symplectic_pairs.size();

  bool on_radical = false;
  for (const auto& r : out.radical) on_radical |= eval_form(m, r);
  if (on_radical) {
    out.b = DicksonB::balanced;
  } else {
    bool arf = false;
    for (const auto& [u, w] : out.symplectic_pairs) arf ^= eval_form(m, u) && eval_form(m, w);
    out.b = arf ? DicksonB::one : DicksonB::zero;
  }
  return out;
}

inline DicksonForm dickson_reduce(const RsQuadratic& q, std::uint64_t n, Semantics sem = Semantics::orbit) {
  return dickson_reduce(form_matrices(q, n, sem));
}

struct Signature {
  std::uint64_t weight = 0;
  std::uint64_t nonlinearity = 0;
  friend auto operator<=>(const Signature&, const Signature&) = default;
};

struct AnalysisReport {
  RsQuadratic q{{1}};
  std::uint64_t n = 0;
  Semantics semantics = Semantics::orbit;
  std::uint64_t v = 0;
  std::uint64_t d = 0;
  bool balanced = false;
  DicksonB dickson_b = DicksonB::zero;
  std::uint64_t weight = 0;
  std::uint64_t nonlinearity = 0;
  std::string method;  // "mrs-closed-form" or "dickson"

  Signature signature() const { return {weight, nonlinearity}; }
};

namespace detail {

inline std::uint64_t pow2(std::uint64_t e) {
  detail::require(e < 64, "2^" + std::to_string(e) + " overflows 64 bits");
  return std::uint64_t{1} << e;
}

inline void check_report_invariants(const AnalysisReport& r) {
  const std::string who = " for q={" + r.q.to_string() + "}, n=" + std::to_string(r.n);
  detail::check(r.n == 2 * r.d + r.v, "n != 2d + v" + who);
  detail::check(r.nonlinearity == pow2(r.n - 1) - pow2(r.n - r.d - 1), "nonlinearity != 2^(n-1) - 2^(n-d-1)" + who);
  detail::check(r.balanced == (r.weight == pow2(r.n - 1)), "balanced flag disagrees with weight" + who);
}

}  // namespace detail

/// Weight/nonlinearity/rank for (q, n). Single offsets in ANF with n >= 2t+1
/// use the gcd(n, t) closed forms; everything else goes through dickson_reduce.
inline AnalysisReport closed_form_report(const RsQuadratic& q, std::uint64_t n, Semantics sem) {
  detail::require(n >= 1, "n must be positive");
  if (n > kReportCap) throw CapExceeded("reports are capped at n=" + std::to_string(kReportCap));
  AnalysisReport r{q, n, sem, 0, 0, false, DicksonB::zero, 0, 0, ""};
  const std::uint64_t half = detail::pow2(n - 1);

  if (sem == Semantics::anf && q.size() == 1 && n >= 2 * q.J() + 1) {
    const std::uint64_t t = q.J();
    const std::uint64_t k = std::gcd(n, t);
    r.v = std::gcd(n, 2 * t);
    r.balanced = (n / k) % 2 == 1;
    detail::check(r.v == (r.balanced ? k : 2 * k),
                  "v(n) is neither k nor 2k as required for (0," + std::to_string(t) + ")_" + std::to_string(n));
    r.d = (n - r.v) / 2;
    if (r.balanced) {
      r.weight = half;
      r.nonlinearity = half - detail::pow2((n + k - 2) / 2);
      r.dickson_b = DicksonB::balanced;
    } else {
      r.weight = r.nonlinearity = half - detail::pow2(n / 2 + k - 1);
      r.dickson_b = DicksonB::zero;
    }
    r.method = "mrs-closed-form";
  } else {
    const PairForm pf = pair_form(q, n, sem);
    const DicksonForm df = dickson_reduce(form_matrices(pf));
    r.d = df.d;
    r.v = n - 2 * df.d;
    r.dickson_b = df.b;
    r.balanced = df.b == DicksonB::balanced;
    const std::uint64_t step = detail::pow2(n - r.d - 1);
    r.nonlinearity = half - step;
    r.weight = r.balanced ? half : (df.b == DicksonB::zero ? half - step : half + step);
    r.method = "dickson";
    const bool same_as_orbit = sem == Semantics::orbit || [&] {
      const PairForm po = pair_form(q, n, Semantics::orbit);
      return po.pair == pf.pair && po.linear == pf.linear;
    }();
    if (same_as_orbit)
      detail::check(r.v == v_value(q, n),
                    "dim ker C != deg gcd(x^n+1, A) for q={" + q.to_string() + "}, n=" + std::to_string(n));
  }
  detail::check_report_invariants(r);
  return r;
}

/// 2^(2t-3) - 2^(t-2): the short-bent weight formula quoted alongside the MRS
/// closed forms. It does not agree with the true weight 2^(2t-1) - 2^(t-1) of
/// (0,t)_(2t); kept only so reports can flag the mismatch.
inline std::optional<std::int64_t> quoted_short_bent_weight(std::uint64_t t) {
  if (t < 2 || t > 31) return std::nullopt;
  return (std::int64_t{1} << (2 * t - 3)) - (std::int64_t{1} << (t - 2));
}

}  // namespace rsquad
