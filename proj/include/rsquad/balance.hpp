#pragma once

// For which n is the trace form of Q balanced? Balancedness depends only on
// the 2-adic valuation of n, and only valuations up to nu_Q can be balanced,
// so a handful of kernel tests at n = 2^nu decide every n.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rsquad/error.hpp"
#include "rsquad/gf2poly.hpp"
#include "rsquad/quadform.hpp"
#include "rsquad/rs_quadratic.hpp"

namespace rsquad {

/// Largest power-of-two exponent tested directly (n = 4096).
inline constexpr unsigned kProfileNuCap = 12;

enum class ProfileShape { never, exact_valuation, valuation_at_most };

inline std::string to_string(ProfileShape s) {
  switch (s) {
    case ProfileShape::never: return "NEVER";
    case ProfileShape::exact_valuation: return "EXACT_VALUATION";
    case ProfileShape::valuation_at_most: return "VALUATION_AT_MOST";
  }
  return "?";
}

struct BalanceProfile {
  ProfileShape shape = ProfileShape::never;
  unsigned k = 0;                // valuation parameter (unused for NEVER)
  std::uint64_t dQ = 0;
  unsigned nuQ = 0;
  std::vector<bool> witness;     // witness[nu] = balanced at n = 2^nu, nu = 0..nuQ

  /// c(Q) for VALUATION_AT_MOST, d(Q) for EXACT_VALUATION: always k + 1.
  unsigned c_or_d() const { return k + 1; }

  bool balanced_at_valuation(unsigned nu) const {
    switch (shape) {
      case ProfileShape::never: return false;
      case ProfileShape::exact_valuation: return nu == k;
      case ProfileShape::valuation_at_most: return nu <= k;
    }
    return false;
  }

  /// Human-readable rule, e.g. "balanced iff n ≡ 2 mod 4".
  std::string describe() const {
    switch (shape) {
      case ProfileShape::never: return "never balanced";
      case ProfileShape::exact_valuation: {
        if (k == 0) return "balanced iff n is odd";
        return "balanced iff n ≡ " + std::to_string(std::uint64_t{1} << k) + " mod " +
               std::to_string(std::uint64_t{1} << (k + 1));
      }
      case ProfileShape::valuation_at_most:
        return "balanced iff n ≢ 0 mod " + std::to_string(std::uint64_t{1} << (k + 1));
    }
    return "?";
  }
};

inline std::uint64_t d_Q(const RsQuadratic& q) {
  const Gf2Poly a = a_polynomial(q);
  detail::check(!a.is_zero(), "A(x) is zero");
  return unit_multiplicity(a);
}

/// The nu with 2^(nu-1) < d <= 2^nu.
inline unsigned ceil_log2(std::uint64_t d) {
  detail::require(d >= 1, "ceil_log2 of zero");
  return d == 1 ? 0u : static_cast<unsigned>(std::bit_width(d - 1));
}

inline unsigned nu_Q(const RsQuadratic& q) { return ceil_log2(d_Q(q)); }

inline BalanceProfile profile(const RsQuadratic& q) {
  BalanceProfile p;
  p.dQ = d_Q(q);
  p.nuQ = ceil_log2(p.dQ);
  if (p.nuQ > kProfileNuCap)
    throw CapExceeded("nu_Q=" + std::to_string(p.nuQ) + " needs kernel tests beyond n=2^" + std::to_string(kProfileNuCap));
  for (unsigned nu = 0; nu <= p.nuQ; ++nu) p.witness.push_back(is_balanced(q, std::uint64_t{1} << nu));

  std::vector<unsigned> on;
  for (unsigned nu = 0; nu <= p.nuQ; ++nu)
    if (p.witness[nu]) on.push_back(nu);

  const std::string who = " for q={" + q.to_string() + "}";
  if (q.size() % 2 == 1) {
    // Odd term count: an initial segment 0..k, and 0 is always in it.
    detail::check(!on.empty() && on.front() == 0, "odd term count but unbalanced for odd n" + who);
    for (std::size_t i = 0; i < on.size(); ++i)
      detail::check(on[i] == i, "balanced valuations are not an initial segment" + who);
    p.shape = ProfileShape::valuation_at_most;
    p.k = on.back();
  } else {
    detail::check(on.size() <= 1, "even term count but more than one balanced valuation" + who);
    if (on.empty()) {
      p.shape = ProfileShape::never;
    } else {
      detail::check(on.front() > 0, "even term count but balanced for odd n" + who);
      p.shape = ProfileShape::exact_valuation;
      p.k = on.front();
    }
  }
  return p;
}

inline bool is_balanced_fast(const BalanceProfile& p, std::uint64_t n) {
  detail::require(n >= 1, "n must be positive");
  return p.balanced_at_valuation(two_adic_valuation(n));
}

inline bool is_balanced_fast(const RsQuadratic& q, std::uint64_t n) { return is_balanced_fast(profile(q), n); }

struct ValuationBlock {
  unsigned mu = 0;
  RsQuadratic block{{1}};
  std::uint64_t d = 0;  // (x+1)-multiplicity of this block's A(x)
};

struct ValuationPartitionReport {
  std::uint64_t dQ = 0;
  std::vector<ValuationBlock> blocks;
};

/// Per-valuation multiplicities: each block's d has 2-adic valuation mu + 1,
/// they are pairwise distinct, and d_Q is their minimum.
inline ValuationPartitionReport valuation_partition_check(const RsQuadratic& q) {
  ValuationPartitionReport r;
  r.dQ = d_Q(q);
  const std::string who = " for q={" + q.to_string() + "}";
  std::uint64_t min_d = ~std::uint64_t{0};
  for (const auto& [mu, block] : partition_by_valuation(q)) {
    const std::uint64_t d = d_Q(block);
    detail::check(two_adic_valuation(d) == mu + 1, "block d has the wrong 2-adic valuation" + who);
    for (const auto& other : r.blocks) detail::check(other.d != d, "block multiplicities collide" + who);
    r.blocks.push_back({mu, block, d});
    min_d = std::min(min_d, d);
  }
  detail::check(min_d == r.dQ, "d_Q is not the minimum block multiplicity" + who);
  return r;
}

}  // namespace rsquad
