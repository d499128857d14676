#pragma once

// Brute-force truth tables and Walsh spectra.
//
// Table index v encodes (x_0, ..., x_{n-1}) with x_0 as the most significant
// of the n bits, i.e. the usual lexicographic listing of GF(2)^n.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "rsquad/error.hpp"
#include "rsquad/form.hpp"
#include "rsquad/rs_quadratic.hpp"

namespace rsquad {

inline constexpr unsigned kTableCap = 28;

class TruthTable {
 public:
  explicit TruthTable(unsigned n) : n_(n), words_(n >= 6 ? (std::size_t{1} << (n - 6)) : 1, 0) {
    if (n > kTableCap) throw CapExceeded("truth tables are capped at n=" + std::to_string(kTableCap));
  }

  unsigned n() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  bool get(std::uint64_t v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(std::uint64_t v, bool b) {
    const std::uint64_t m = std::uint64_t{1} << (v & 63);
    if (b)
      words_[v >> 6] |= m;
    else
      words_[v >> 6] &= ~m;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  unsigned n_;
  std::vector<std::uint64_t> words_;
};

struct WalshSpectrum {
  unsigned n = 0;
  std::vector<std::int32_t> values;

  std::int64_t max_abs() const {
    std::int64_t m = 0;
    for (auto w : values) m = std::max<std::int64_t>(m, std::llabs(w));
    return m;
  }
};

namespace detail {

inline std::uint64_t rotl_bits(std::uint64_t v, unsigned s, unsigned n) {
  const std::uint64_t mask = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  s %= n;
  if (s == 0) return v;
  return ((v << s) | (v >> (n - s))) & mask;
}

/// Evaluate a PairForm at the index v of a table with n <= 64 variables.
inline bool eval_pair_form(const PairForm& f, std::uint64_t v) {
  const auto n = static_cast<unsigned>(f.n);
  unsigned acc = 0;
  if (f.linear) acc ^= static_cast<unsigned>(std::popcount(v));
  for (std::uint64_t s = 1; s < f.pair.size(); ++s) {
    if (!f.pair[s]) continue;
    if (2 * s == f.n) {
      const unsigned h = n / 2;
      acc ^= static_cast<unsigned>(std::popcount((v >> h) & v & ((std::uint64_t{1} << h) - 1)));
    } else {
      acc ^= static_cast<unsigned>(std::popcount(v & rotl_bits(v, static_cast<unsigned>(s), n)));
    }
  }
  return acc & 1u;
}

}  // namespace detail

inline TruthTable table_from_form(const PairForm& f) {
  detail::require(f.n >= 1, "variable count must be at least 1");
  TruthTable t(static_cast<unsigned>(f.n));
  for (std::uint64_t v = 0; v < t.size(); ++v)
    if (detail::eval_pair_form(f, v)) t.set(v, true);
  return t;
}

inline TruthTable table_from_anf(const RsQuadratic& q, unsigned n, Semantics sem) {
  detail::require(n >= 1, "variable count must be at least 1");
  if (n > kTableCap) throw CapExceeded("truth tables are capped at n=" + std::to_string(kTableCap));
  return table_from_form(pair_form(q, n, sem));
}

inline std::uint64_t weight(const TruthTable& t) {
  std::uint64_t w = 0;
  if (t.n() >= 6) {
    for (auto word : t.words()) w += static_cast<std::uint64_t>(std::popcount(word));
  } else {
    w = static_cast<std::uint64_t>(std::popcount(t.words()[0] & ((std::uint64_t{1} << t.size()) - 1)));
  }
  return w;
}

/// f(rho(x)) = f(x) where rho shifts every variable one place to the left.
inline bool is_rotation_invariant(const TruthTable& t) {
  for (std::uint64_t v = 0; v < t.size(); ++v)
    if (t.get(v) != t.get(detail::rotl_bits(v, 1, t.n()))) return false;
  return true;
}

/// In-place fast Walsh-Hadamard transform of the +-1 sign table.
inline WalshSpectrum walsh(const TruthTable& t) {
  WalshSpectrum s{t.n(), std::vector<std::int32_t>(t.size())};
  auto& a = s.values;
  for (std::uint64_t v = 0; v < t.size(); ++v) a[v] = t.get(v) ? -1 : 1;
  for (std::uint64_t h = 1; h < t.size(); h <<= 1)
    for (std::uint64_t i = 0; i < t.size(); i += 2 * h)
      for (std::uint64_t j = i; j < i + h; ++j) {
        const std::int32_t x = a[j], y = a[j + h];
        a[j] = x + y;
        a[j + h] = x - y;
      }
  return s;
}

inline std::uint64_t nonlinearity(const WalshSpectrum& w) {
  return (std::uint64_t{1} << (w.n - 1)) - static_cast<std::uint64_t>(w.max_abs() / 2);
}

inline std::uint64_t nonlinearity(const TruthTable& t) {
  detail::require(t.n() >= 1, "nonlinearity needs n >= 1");
  return nonlinearity(walsh(t));
}

}  // namespace rsquad
