#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library; everything is recomputed from first principles.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------------------
// GF(2)[x] on single machine words (degree < 64)

inline int deg(std::uint64_t p) { return p ? 63 - std::countl_zero(p) : -1; }

inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  for (int i = 0; i < 64; ++i)
    if ((a >> i) & 1u) r ^= b << i;
  return r;
}

inline std::uint64_t pmod(std::uint64_t a, std::uint64_t m) {
  const int dm = deg(m);
  while (deg(a) >= dm) a ^= m << (deg(a) - dm);
  return a;
}

inline std::uint64_t pdiv(std::uint64_t a, std::uint64_t m) {
  const int dm = deg(m);
  std::uint64_t q = 0;
  while (deg(a) >= dm) {
    q |= std::uint64_t{1} << (deg(a) - dm);
    a ^= m << (deg(a) - dm);
  }
  return q;
}

inline std::uint64_t pgcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = pmod(a, b);
    std::swap(a, b);
  }
  return a;
}

/// Multiplicity of (x+1), by repeated exact division.
inline unsigned unit_mult(std::uint64_t p) {
  unsigned k = 0;
  while (p && pmod(p, 0b11) == 0) {
    p = pdiv(p, 0b11);
    ++k;
  }
  return k;
}

/// x^e mod m by repeated multiplication by x.
inline std::uint64_t xpow_mod(std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = pmod(1, m);
  for (std::uint64_t i = 0; i < e; ++i) r = pmod(r << 1, m);
  return r;
}

/// Smallest N >= 1 with p | x^N + 1 (p coprime to x), by linear scan.
inline std::uint64_t smallest_dividing_n(std::uint64_t p, std::uint64_t limit = 1u << 20) {
  std::uint64_t r = pmod(0b10, p);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (r == pmod(1, p)) return n;
    r = pmod(r << 1, p);
  }
  return 0;
}

/// Trial division by every polynomial of degree 1..deg/2.
inline bool irreducible(std::uint64_t p) {
  const int d = deg(p);
  if (d < 1) return false;
  for (std::uint64_t f = 2; deg(f) <= d / 2; ++f)
    if (pmod(p, f) == 0) return false;
  return true;
}

/// A(x) for offsets: sum over i of x^(J+i) + x^(J-i), as a word.
inline std::uint64_t a_poly(const std::vector<std::uint64_t>& offs) {
  const std::uint64_t J = offs.back();
  std::uint64_t a = 0;
  for (auto i : offs) a ^= (std::uint64_t{1} << (J + i)) ^ (std::uint64_t{1} << (J - i));
  return a;
}

// ---------------------------------------------------------------------------
// Boolean functions from explicit monomial lists

/// Monomial x_i x_j with i <= j; i == j stands for the linear term x_i.
using Mono = std::pair<unsigned, unsigned>;

inline Mono mono(std::uint64_t a, std::uint64_t b) {
  return {static_cast<unsigned>(std::min(a, b)), static_cast<unsigned>(std::max(a, b))};
}

/// ANF reading: offset t contributes each distinct monomial x_j x_{j+t mod n} once.
/// ORBIT reading: the n-term sum over j, with repeated monomials cancelling.
inline std::vector<Mono> monomials(const std::vector<std::uint64_t>& offs, unsigned n, bool anf) {
  std::map<Mono, int> parity;
  for (auto t : offs) {
    if (anf) {
      std::set<Mono> s;
      for (unsigned j = 0; j < n; ++j) s.insert(mono(j, (j + t) % n));
      for (const auto& m : s) parity[m] ^= 1;
    } else {
      for (unsigned j = 0; j < n; ++j) parity[mono(j, (j + t) % n)] ^= 1;
    }
  }
  std::vector<Mono> out;
  for (const auto& [m, p] : parity)
    if (p) out.push_back(m);
  return out;
}

/// Coordinate j of table index v; x_0 is the most significant bit.
inline unsigned bit(std::uint64_t v, unsigned j, unsigned n) { return (v >> (n - 1 - j)) & 1u; }

inline unsigned eval(const std::vector<Mono>& ms, std::uint64_t v, unsigned n) {
  unsigned f = 0;
  for (const auto& [i, j] : ms) f ^= bit(v, i, n) & bit(v, j, n);
  return f;
}

inline std::vector<std::uint8_t> table(const std::vector<Mono>& ms, unsigned n) {
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (std::uint64_t v = 0; v < t.size(); ++v) t[v] = static_cast<std::uint8_t>(eval(ms, v, n));
  return t;
}

inline std::uint64_t weight(const std::vector<std::uint8_t>& t) {
  return static_cast<std::uint64_t>(std::count(t.begin(), t.end(), 1));
}

/// W(w) = sum_x (-1)^(f(x) + w.x), quadratic time.
inline std::vector<std::int64_t> walsh_naive(const std::vector<std::uint8_t>& t) {
  std::vector<std::int64_t> w(t.size());
  for (std::uint64_t a = 0; a < t.size(); ++a) {
    std::int64_t s = 0;
    for (std::uint64_t x = 0; x < t.size(); ++x) s += ((t[x] ^ std::popcount(a & x)) & 1) ? -1 : 1;
    w[a] = s;
  }
  return w;
}

/// Nonlinearity as the distance to the nearest affine function, by enumeration.
inline std::uint64_t nonlinearity_naive(const std::vector<std::uint8_t>& t) {
  std::uint64_t best = t.size();
  for (std::uint64_t a = 0; a < t.size(); ++a) {
    std::uint64_t dist = 0;
    for (std::uint64_t x = 0; x < t.size(); ++x) dist += t[x] != (std::popcount(a & x) & 1);
    best = std::min({best, dist, t.size() - dist});
  }
  return best;
}

// ---------------------------------------------------------------------------
// Linear algebra over GF(2), rows as words (n <= 64)

inline unsigned rank(std::vector<std::uint64_t> rows) {
  unsigned r = 0;
  for (int c = 63; c >= 0; --c) {
    auto it = std::find_if(rows.begin() + r, rows.end(), [c](std::uint64_t x) { return (x >> c) & 1u; });
    if (it == rows.end()) continue;
    std::swap(rows[r], *it);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && ((rows[i] >> c) & 1u)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

/// Dimension of the radical of the alternating form of the quadratic part.
inline unsigned radical_dim(const std::vector<Mono>& ms, unsigned n) {
  std::vector<std::uint64_t> rows(n, 0);
  for (const auto& [i, j] : ms)
    if (i != j) {
      rows[i] ^= std::uint64_t{1} << j;
      rows[j] ^= std::uint64_t{1} << i;
    }
  return n - rank(rows);
}

// ---------------------------------------------------------------------------
// GF(2^n) with an explicit modulus

struct Field {
  unsigned n;
  std::uint64_t mod;

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return pmod(clmul(a, b), mod); }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
  std::uint64_t trace(std::uint64_t x) const {
    std::uint64_t s = 0;
    for (unsigned i = 0; i < n; ++i) {
      s ^= x;
      x = mul(x, x);
    }
    return s;
  }
};

/// Lex-smallest irreducible of degree n with constant term 1.
inline std::uint64_t first_irreducible(unsigned n) {
  for (std::uint64_t p = (std::uint64_t{1} << n) | 1u;; p += 2)
    if (irreducible(p)) return p;
}

/// sum over x of (-1)^(sum_i Tr(x^(2^i+1))), exponents reduced only through field arithmetic.
inline std::int64_t trace_walsh_zero(const Field& f, const std::vector<std::uint64_t>& offs) {
  std::int64_t w = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.n); ++x) {
    std::uint64_t s = 0;
    for (auto i : offs) {
      std::uint64_t y = x;
      for (std::uint64_t k = 0; k < i; ++k) y = f.mul(y, y);
      s ^= f.trace(f.mul(y, x));
    }
    w += (s & 1u) ? -1 : 1;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Integers

inline std::uint64_t tau(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

inline unsigned nu2(std::uint64_t m) {
  unsigned k = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++k;
  }
  return k;
}

/// All offset sets with largest offset <= J, as ascending vectors.
inline std::vector<std::vector<std::uint64_t>> offset_sets(std::uint64_t J) {
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << J); ++m) {
    std::vector<std::uint64_t> s;
    for (std::uint64_t i = 0; i < J; ++i)
      if ((m >> i) & 1u) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

}  // namespace oracle
