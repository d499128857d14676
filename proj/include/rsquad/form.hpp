#pragma once

// The concrete Boolean function on GF(2)^n that an offset set denotes.
//
// ANF:   each offset t contributes (0,t)_n, i.e. x_j x_{j+t} for every j; when
//        t = n/2 only the n/2 distinct monomials (the short function).
// ORBIT: each offset contributes the full n-term sum over j of x_j x_{j+t}, so
//        short orbits cancel and an offset = 0 mod n gives x_0 + ... + x_{n-1}.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rsquad/error.hpp"
#include "rsquad/rs_quadratic.hpp"

namespace rsquad {

enum class Semantics { anf, orbit };

inline std::string to_string(Semantics s) { return s == Semantics::anf ? "anf" : "orbit"; }

inline Semantics parse_semantics(std::string_view s) {
  if (s == "anf") return Semantics::anf;
  if (s == "orbit") return Semantics::orbit;
  throw DomainError("unknown semantics '" + std::string(s) + "' (expected anf|orbit)");
}

/// Coefficients of the reduced function: pair[s] multiplies every monomial
/// x_j x_k with cyclic distance s (1 <= s <= n/2), plus an optional x_0+...+x_{n-1}.
struct PairForm {
  std::uint64_t n = 0;
  std::vector<std::uint8_t> pair;  // index 0 unused
  bool linear = false;

  bool is_zero() const {
    if (linear) return false;
    for (auto c : pair)
      if (c) return false;
    return true;
  }
  /// Cyclic distance s has coefficient 1 (s taken mod n, then folded).
  bool pair_at(std::uint64_t r) const {
    r %= n;
    if (r == 0) return false;
    return pair[std::min(r, n - r)] != 0;
  }
};

inline PairForm pair_form(const RsQuadratic& q, std::uint64_t n, Semantics sem) {
  detail::require(n >= 1, "variable count must be at least 1");
  PairForm f{n, std::vector<std::uint8_t>(n / 2 + 1, 0), false};
  for (auto t : q.offsets()) {
    const std::uint64_t r = t % n;
    if (r == 0) {
      if (sem == Semantics::anf)
        throw DomainError("offset " + std::to_string(t) + " is 0 mod n=" + std::to_string(n) +
                          "; no ANF monomial orbit");
      f.linear = !f.linear;
      continue;
    }
    const std::uint64_t s = std::min(r, n - r);
    // ORBIT: the n-term sum over a distance-n/2 orbit hits each monomial twice.
    if (sem == Semantics::orbit && 2 * s == n) continue;
    f.pair[s] ^= 1u;
  }
  return f;
}

}  // namespace rsquad
