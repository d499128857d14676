#pragma once

// Polynomials over GF(2), packed little-endian by exponent.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsquad/error.hpp"

namespace rsquad {

class Gf2Poly {
 public:
  Gf2Poly() = default;

  static Gf2Poly zero() { return {}; }
  static Gf2Poly one() { return monomial(0); }
  static Gf2Poly monomial(std::size_t k) {
    Gf2Poly p;
    p.set_coeff(k, true);
    return p;
  }
  static Gf2Poly from_exponents(const std::vector<std::size_t>& exps) {
    Gf2Poly p;
    for (auto e : exps) p.flip_coeff(e);
    return p;
  }
  /// Bit k of `bits` is the coefficient of x^k.
  static Gf2Poly from_bits(std::uint64_t bits) {
    Gf2Poly p;
    if (bits) p.words_.push_back(bits);
    return p;
  }

  bool is_zero() const { return words_.empty(); }

  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (words_.empty()) return std::nullopt;
    return (words_.size() - 1) * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_.back()));
  }
  /// Degree of a polynomial known to be nonzero.
  std::size_t deg() const {
    auto d = degree();
    detail::require(d.has_value(), "degree of the zero polynomial");
    return *d;
  }

  bool coeff(std::size_t k) const {
    const std::size_t w = k >> 6;
    return w < words_.size() && ((words_[w] >> (k & 63)) & 1u);
  }
  void set_coeff(std::size_t k, bool v) {
    if (coeff(k) != v) flip_coeff(k);
  }
  void flip_coeff(std::size_t k) {
    const std::size_t w = k >> 6;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] ^= std::uint64_t{1} << (k & 63);
    trim();
  }

  std::vector<std::size_t> exponents() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    return out;
  }

  std::size_t term_count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Value at x = 1, i.e. parity of the number of terms.
  bool eval_one() const { return term_count() & 1u; }

  const std::vector<std::uint64_t>& words() const { return words_; }

  Gf2Poly& operator+=(const Gf2Poly& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    trim();
    return *this;
  }
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }

  /// Multiply by x^k.
  Gf2Poly shifted(std::size_t k) const {
    if (is_zero()) return {};
    Gf2Poly out;
    out.words_.assign(words_.size() + k / 64 + 1, 0);
    xor_shifted_into(out.words_, words_, k);
    out.trim();
    return out;
  }

  /// Carry-less product.
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Gf2Poly out;
    out.words_.assign(a.words_.size() + b.words_.size() + 1, 0);
    for (auto e : a.exponents()) xor_shifted_into(out.words_, b.words_, e);
    out.trim();
    return out;
  }
  Gf2Poly& operator*=(const Gf2Poly& o) { return *this = *this * o; }

  /// Formal derivative: keeps odd-exponent terms, lowered by one.
  Gf2Poly derivative() const {
    Gf2Poly out;
    for (auto e : exponents())
      if (e & 1u) out.flip_coeff(e - 1);
    return out;
  }

  /// Square root of a polynomial whose derivative vanishes (all exponents even).
  Gf2Poly sqrt_of_square() const {
    Gf2Poly out;
    for (auto e : exponents()) {
      detail::require(e % 2 == 0, "sqrt_of_square: odd exponent present");
      out.flip_coeff(e / 2);
    }
    return out;
  }

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

  /// Ascending exponent list joined by '+', e.g. "1+x+x^4"; zero prints "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto e : exponents()) {
      if (!s.empty()) s += '+';
      if (e == 0)
        s += '1';
      else if (e == 1)
        s += 'x';
      else
        s += "x^" + std::to_string(e);
    }
    return s;
  }

  /// Hex coefficient dump, most significant nibble first, e.g. 1+x+x^4 -> "0x13".
  std::string to_hex() const {
    if (is_zero()) return "0x0";
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    const std::size_t nibbles = deg() / 4 + 1;
    for (std::size_t i = nibbles; i-- > 0;) {
      unsigned v = 0;
      for (unsigned b = 0; b < 4; ++b)
        if (coeff(4 * i + b)) v |= 1u << b;
      s += digits[v];
    }
    return "0x" + s;
  }

  static Gf2Poly parse(std::string_view text);
  static Gf2Poly from_hex(std::string_view text);

 private:
  static void xor_shifted_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src,
                               std::size_t k) {
    const std::size_t ws = k / 64, bs = k % 64;
    for (std::size_t i = 0; i < src.size(); ++i) {
      dst[i + ws] ^= src[i] << bs;
      if (bs) dst[i + ws + 1] ^= src[i] >> (64 - bs);
    }
  }

  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<std::uint64_t> words_;
};

inline Gf2Poly Gf2Poly::parse(std::string_view text) {
  Gf2Poly p;
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t') t += c;
  if (t == "0") return p;
  detail::require(!t.empty(), "empty polynomial literal");
  std::size_t pos = 0;
  while (pos <= t.size()) {
    const std::size_t next = std::min(t.find('+', pos), t.size());
    const std::string term = t.substr(pos, next - pos);
    detail::require(!term.empty(), "malformed polynomial literal: " + std::string(text));
    std::size_t e = 0;
    if (term == "1") {
      e = 0;
    } else if (term == "x") {
      e = 1;
    } else if (term.rfind("x^", 0) == 0 && term.size() > 2 &&
               std::all_of(term.begin() + 2, term.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      e = std::stoul(term.substr(2));
    } else {
      throw DomainError("malformed polynomial term '" + term + "'");
    }
    p.flip_coeff(e);
    pos = next + 1;
  }
  return p;
}

inline Gf2Poly Gf2Poly::from_hex(std::string_view text) {
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) text.remove_prefix(2);
  detail::require(!text.empty(), "empty hex polynomial");
  Gf2Poly p;
  std::size_t bit = 0;
  for (auto it = text.rbegin(); it != text.rend(); ++it, bit += 4) {
    const char c = *it;
    unsigned v;
    if (c >= '0' && c <= '9')
      v = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f')
      v = static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F')
      v = static_cast<unsigned>(c - 'A' + 10);
    else
      throw DomainError("bad hex digit in polynomial");
    for (unsigned b = 0; b < 4; ++b)
      if (v & (1u << b)) p.flip_coeff(bit + b);
  }
  return p;
}

struct Gf2DivRem {
  Gf2Poly quotient;
  Gf2Poly remainder;
};

inline Gf2DivRem divrem(const Gf2Poly& a, const Gf2Poly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const std::size_t db = b.deg();
  Gf2DivRem out{Gf2Poly{}, a};
  while (!out.remainder.is_zero() && out.remainder.deg() >= db) {
    const std::size_t shift = out.remainder.deg() - db;
    out.quotient.flip_coeff(shift);
    out.remainder += b.shifted(shift);
  }
  return out;
}

inline Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b) { return divrem(a, b).remainder; }
inline Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& b) { return divrem(a, b).quotient; }

inline bool divides(const Gf2Poly& d, const Gf2Poly& p) { return (p % d).is_zero(); }

inline Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Gf2Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// base^exp mod m.
inline Gf2Poly powmod(const Gf2Poly& base, std::uint64_t exp, const Gf2Poly& m) {
  Gf2Poly result = Gf2Poly::one() % m;
  Gf2Poly b = base % m;
  while (exp) {
    if (exp & 1u) result = (result * b) % m;
    exp >>= 1;
    if (exp) b = (b * b) % m;
  }
  return result;
}

/// x^(2^k) mod m by k squarings.
inline Gf2Poly x_pow_two_pow(std::size_t k, const Gf2Poly& m) {
  Gf2Poly r = Gf2Poly::monomial(1) % m;
  for (std::size_t i = 0; i < k; ++i) r = (r * r) % m;
  return r;
}

/// Multiplicity of the factor (x+1).
inline std::size_t unit_multiplicity(Gf2Poly p) {
  if (p.is_zero()) throw DomainError("unit_multiplicity of the zero polynomial");
  const Gf2Poly x1 = Gf2Poly::from_bits(0b11);
  std::size_t k = 0;
  while (!p.eval_one()) {
    p = p / x1;
    ++k;
  }
  return k;
}

/// Product of the distinct irreducible factors.
inline Gf2Poly radical(const Gf2Poly& p) {
  if (p.is_zero()) throw DomainError("radical of the zero polynomial");
  if (p.deg() == 0) return p;
  const Gf2Poly dp = p.derivative();
  if (dp.is_zero()) return radical(p.sqrt_of_square());
  // p / gcd(p, p') keeps exactly the irreducibles of odd multiplicity;
  // the even-multiplicity ones survive in the gcd and are recovered recursively.
  const Gf2Poly c = gcd(p, dp);
  const Gf2Poly w = p / c;
  if (c.deg() == 0) return w;
  const Gf2Poly rc = radical(c);
  return w * rc / gcd(w, rc);
}

namespace detail {

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      f.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

/// Multiplicative order of x modulo g, where g is a product of distinct
/// irreducibles of degree k (so the order divides 2^k - 1).
inline std::uint64_t order_mod_equal_degree(const Gf2Poly& g, std::size_t k) {
  detail::require(k <= 62, "radical_odd_order: irreducible factor degree too large");
  std::uint64_t order = (std::uint64_t{1} << k) - 1;
  const Gf2Poly x = Gf2Poly::monomial(1);
  const Gf2Poly one = Gf2Poly::one() % g;
  for (auto q : prime_factors(order)) {
    while (order % q == 0 && powmod(x, order / q, g) == one) order /= q;
  }
  return order;
}

}  // namespace detail

/// Smallest odd m such that the radical of p divides x^m + 1.
inline std::uint64_t radical_odd_order(const Gf2Poly& p) {
  if (p.is_zero() || !p.coeff(0)) throw DomainError("radical_odd_order needs a nonzero constant term");
  Gf2Poly rest = radical(p);
  std::uint64_t m = 1;
  // Distinct-degree split of the squarefree radical.
  Gf2Poly h = Gf2Poly::monomial(1) % rest;
  for (std::size_t k = 1; rest.deg() > 0; ++k) {
    if (2 * k > rest.deg()) {
      // What remains is a single irreducible of degree deg(rest).
      m = std::lcm(m, detail::order_mod_equal_degree(rest, rest.deg()));
      break;
    }
    h = (h * h) % rest;
    const Gf2Poly g = gcd(rest, h + Gf2Poly::monomial(1));
    if (g.deg() > 0) {
      m = std::lcm(m, detail::order_mod_equal_degree(g, k));
      rest = rest / g;
      h = h % rest;
    }
  }
  return m;
}

/// Smallest N = 2^t m with p | x^N + 1, m = radical_odd_order(p).
inline std::uint64_t dividing_period(const Gf2Poly& p) {
  const std::uint64_t m = radical_odd_order(p);
  // x^(2^t m) + 1 = (x^m + 1)^(2^t); find the least t that absorbs every multiplicity.
  const Gf2Poly base = Gf2Poly::monomial(m) + Gf2Poly::one();
  Gf2Poly power = base;
  std::uint64_t n = m;
  while (!divides(p, power)) {
    power = power * power;
    n *= 2;
  }
  return n;
}

}  // namespace rsquad
