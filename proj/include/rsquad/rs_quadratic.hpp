#pragma once

// Quadratic rotation symmetric functions as sets of monomial offsets.
//
// The offset set {i_1 < ... < i_k} stands for sum_i (0,i)_n in ANF terms and
// for x -> sum_i Tr_n(x^(2^i + 1)) on the trace side.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rsquad/error.hpp"
#include "rsquad/gf2poly.hpp"

namespace rsquad {

/// 2-adic valuation; nu(0) is undefined.
inline unsigned two_adic_valuation(std::uint64_t m) {
  detail::require(m != 0, "2-adic valuation of zero");
  return static_cast<unsigned>(std::countr_zero(m));
}

class RsQuadratic {
 public:
  RsQuadratic() = delete;

  explicit RsQuadratic(std::vector<std::uint64_t> offsets) : offsets_(std::move(offsets)) {
    detail::require(!offsets_.empty(), "an RS quadratic needs at least one offset");
    detail::require(offsets_.front() >= 1, "offsets must be positive");
    for (std::size_t i = 1; i < offsets_.size(); ++i)
      detail::require(offsets_[i - 1] < offsets_[i], "offsets must be strictly ascending");
  }

  /// The MRS function (0,t).
  static RsQuadratic mrs(std::uint64_t t) { return RsQuadratic({t}); }

  /// Parses "i1,i2,...".
  static RsQuadratic parse(std::string_view text) {
    std::vector<std::uint64_t> offs;
    std::string tok;
    auto flush = [&] {
      detail::require(!tok.empty(), "empty offset in function literal");
      detail::require(std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }),
                      "offset '" + tok + "' is not a nonnegative integer");
      detail::require(tok.size() <= 9, "offset '" + tok + "' too large");
      offs.push_back(std::stoull(tok));
      tok.clear();
    };
    for (char c : text) {
      if (c == ' ') continue;
      if (c == ',')
        flush();
      else
        tok += c;
    }
    flush();
    return RsQuadratic(std::move(offs));
  }

  const std::vector<std::uint64_t>& offsets() const { return offsets_; }
  std::size_t size() const { return offsets_.size(); }
  /// Largest offset.
  std::uint64_t J() const { return offsets_.back(); }

  std::string to_string() const {
    std::string s;
    for (auto o : offsets_) {
      if (!s.empty()) s += ',';
      s += std::to_string(o);
    }
    return s;
  }

  friend auto operator<=>(const RsQuadratic&, const RsQuadratic&) = default;
  friend bool operator==(const RsQuadratic&, const RsQuadratic&) = default;

 private:
  std::vector<std::uint64_t> offsets_;
};

/// Numerator of A(x) = sum_i (x^i + x^-i): with m = J, sum_i (x^(m+i) + x^(m-i)),
/// then normalized so the constant term is 1.
inline Gf2Poly a_polynomial(const RsQuadratic& q) {
  const std::uint64_t m = q.J();
  Gf2Poly p;
  for (auto i : q.offsets()) {
    p.flip_coeff(m + i);
    p.flip_coeff(m - i);
  }
  detail::check(!p.is_zero(), "A(x) vanished for distinct offsets");
  const auto e = p.exponents();
  if (e.front() > 0) p = p / Gf2Poly::monomial(e.front());
  return p;
}

struct ResidueMultiset {
  std::uint64_t n = 1;
  std::map<std::uint64_t, unsigned> counts;

  unsigned count(std::uint64_t r) const {
    auto it = counts.find(r);
    return it == counts.end() ? 0u : it->second;
  }
  unsigned total() const {
    unsigned t = 0;
    for (const auto& [r, c] : counts) t += c;
    return t;
  }

  friend bool operator==(const ResidueMultiset&, const ResidueMultiset&) = default;
};

inline ResidueMultiset reduce_mod(const RsQuadratic& q, std::uint64_t n) {
  detail::require(n >= 1, "modulus must be positive");
  ResidueMultiset m{n, {}};
  for (auto i : q.offsets()) ++m.counts[i % n];
  return m;
}

namespace detail {

/// Every class {r, n-r} other than {0} and {n/2} has even total multiplicity,
/// and so does {0}.
inline bool pairs_off_except_half(const ResidueMultiset& m) {
  if (m.count(0) % 2) return false;
  std::map<std::uint64_t, unsigned> classes;
  for (const auto& [r, c] : m.counts)
    if (r != 0 && 2 * r != m.n) classes[std::min(r, m.n - r)] += c;
  return std::all_of(classes.begin(), classes.end(), [](const auto& kv) { return kv.second % 2 == 0; });
}

}  // namespace detail

/// Splits into pairs {i, i'} with i +- i' = 0 mod n.
inline bool is_equitable(const ResidueMultiset& m) {
  if (!detail::pairs_off_except_half(m)) return false;
  return m.n % 2 || m.count(m.n / 2) % 2 == 0;
}

/// Equitable plus an odd number of copies of n/2 (n even).
inline bool is_semi_equitable(const ResidueMultiset& m) {
  if (m.n % 2) return false;
  return detail::pairs_off_except_half(m) && m.count(m.n / 2) % 2 == 1;
}

/// The trace form vanishes on GF(2^n) (equivalently, the orbit-sum form on GF(2)^n).
inline bool vanishes_identically(const RsQuadratic& q, std::uint64_t n) {
  const auto m = reduce_mod(q, n);
  return is_equitable(m) || is_semi_equitable(m);
}

/// Offsets grouped by 2-adic valuation.
inline std::map<unsigned, RsQuadratic> partition_by_valuation(const RsQuadratic& q) {
  std::map<unsigned, std::vector<std::uint64_t>> groups;
  for (auto i : q.offsets()) groups[two_adic_valuation(i)].push_back(i);
  std::map<unsigned, RsQuadratic> out;
  for (auto& [mu, offs] : groups) out.emplace(mu, RsQuadratic(std::move(offs)));
  return out;
}

}  // namespace rsquad
