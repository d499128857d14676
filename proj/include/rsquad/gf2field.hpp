#pragma once

// GF(2^n) for small n in the polynomial basis, with the absolute trace.

#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "rsquad/bits.hpp"
#include "rsquad/error.hpp"
#include "rsquad/gf2poly.hpp"
#include "rsquad/rs_quadratic.hpp"

namespace rsquad {

inline constexpr unsigned kFieldDegreeCap = 24;

/// Ben-Or test: p of degree n is irreducible iff gcd(p, x^(2^k) - x) = 1 for k <= n/2.
inline bool is_irreducible(const Gf2Poly& p) {
  if (p.is_zero() || p.deg() == 0) return false;
  const std::size_t n = p.deg();
  Gf2Poly h = Gf2Poly::monomial(1) % p;
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    h = (h * h) % p;
    if (gcd(p, h + Gf2Poly::monomial(1)).deg() > 0) return false;
  }
  return true;
}

/// Field elements are the low n bits of a word: bit k is the coefficient of alpha^k.
using FieldElem = std::uint32_t;

class FieldCtx {
 public:
  /// Lex-smallest irreducible of degree n with nonzero constant term.
  explicit FieldCtx(unsigned n) : n_(n) {
    if (n < 1 || n > kFieldDegreeCap)
      throw CapExceeded("field degree must be in 1.." + std::to_string(kFieldDegreeCap));
    const std::uint64_t top = std::uint64_t{1} << n;
    for (std::uint64_t bits = top | 1u; bits < 2 * top; bits += 2) {
      const Gf2Poly cand = Gf2Poly::from_bits(bits);
      if (is_irreducible(cand)) {
        modulus_ = cand;
        modulus_bits_ = bits;
        break;
      }
    }
    detail::check(!modulus_.is_zero(), "no irreducible polynomial found");
    for (unsigned k = 0; k < n_; ++k)
      if (trace_by_frobenius(FieldElem{1} << k)) trace_mask_ |= FieldElem{1} << k;
  }

  unsigned degree() const { return n_; }
  const Gf2Poly& modulus() const { return modulus_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  FieldElem mask() const { return static_cast<FieldElem>((std::uint64_t{1} << n_) - 1); }

  FieldElem add(FieldElem a, FieldElem b) const { return a ^ b; }

  FieldElem mul(FieldElem a, FieldElem b) const {
    std::uint64_t prod = 0;
    for (std::uint64_t x = a; x; x &= x - 1) prod ^= std::uint64_t{b} << std::countr_zero(x);
    for (int k = 2 * static_cast<int>(n_) - 2; k >= static_cast<int>(n_); --k)
      if ((prod >> k) & 1u) prod ^= modulus_bits_ << (k - static_cast<int>(n_));
    return static_cast<FieldElem>(prod);
  }

  FieldElem square(FieldElem a) const { return mul(a, a); }

  /// a^(2^k); k is reduced mod n since Frobenius has order n.
  FieldElem frobenius(FieldElem a, std::uint64_t k) const {
    k %= n_;
    for (std::uint64_t i = 0; i < k; ++i) a = square(a);
    return a;
  }

  FieldElem pow(FieldElem a, std::uint64_t e) const {
    FieldElem r = 1;
    while (e) {
      if (e & 1u) r = mul(r, a);
      e >>= 1;
      if (e) a = square(a);
    }
    return r;
  }

  /// Tr(x) via the precomputed linear functional.
  bool trace(FieldElem x) const { return std::popcount(x & trace_mask_) & 1; }

  /// Tr(x) = x + x^2 + ... + x^(2^(n-1)), summed directly.
  FieldElem trace_sum(FieldElem x) const {
    FieldElem acc = 0;
    for (unsigned i = 0; i < n_; ++i) {
      acc ^= x;
      x = square(x);
    }
    return acc;
  }

  bool is_valid(FieldElem x) const { return (x & ~mask()) == 0; }

  std::string to_hex(FieldElem x) const {
    std::ostringstream os;
    os << "0x" << std::hex << x;
    return os.str();
  }

 private:
  bool trace_by_frobenius(FieldElem x) const {
    const FieldElem t = trace_sum(x);
    detail::check(t == 0 || t == 1, "trace left the prime field");
    return t == 1;
  }

  unsigned n_;
  Gf2Poly modulus_;
  std::uint64_t modulus_bits_ = 0;
  FieldElem trace_mask_ = 0;
};

inline FieldCtx field_new(unsigned n) { return FieldCtx(n); }

/// sum_i Tr(x^(2^i + 1)) over the offsets of q.
inline bool eval_trace_form(const FieldCtx& ctx, const RsQuadratic& q, FieldElem x) {
  bool acc = false;
  for (auto i : q.offsets()) acc ^= ctx.trace(ctx.mul(ctx.frobenius(x, i), x));
  return acc;
}

/// sum over all x in GF(2^n) of (-1)^Q'(x), Q' the trace form of q.
inline std::int64_t trace_walsh_zero(const FieldCtx& ctx, const RsQuadratic& q) {
  std::int64_t w = 0;
  for (std::uint64_t x = 0; x < ctx.size(); ++x) w += eval_trace_form(ctx, q, static_cast<FieldElem>(x)) ? -1 : 1;
  return w;
}

/// GF(2)-basis of the kernel of x -> sum_i (x^(2^(n-i)) + x^(2^i)) on GF(2^n).
inline std::vector<FieldElem> linearized_kernel(const FieldCtx& ctx, const RsQuadratic& q) {
  const unsigned n = ctx.degree();
  // Column k holds the image of alpha^k.
  BitMatrix m(n, n);
  for (unsigned k = 0; k < n; ++k) {
    const FieldElem a = FieldElem{1} << k;
    FieldElem image = 0;
    for (auto i : q.offsets()) {
      const std::uint64_t r = i % n;
      image ^= ctx.frobenius(a, (n - r) % n) ^ ctx.frobenius(a, r);
    }
    for (unsigned row = 0; row < n; ++row)
      if ((image >> row) & 1u) m.set(row, k);
  }
  std::vector<FieldElem> basis;
  for (const auto& v : null_space(m)) {
    FieldElem e = 0;
    for (unsigned k = 0; k < n; ++k)
      if (v.get(k)) e |= FieldElem{1} << k;
    basis.push_back(e);
  }
  return basis;
}

}  // namespace rsquad
