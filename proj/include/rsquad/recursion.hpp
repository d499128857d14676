#pragma once

// Weight recursions: rules matrices, exact minimal polynomials, recurrence
// fitting and extension, and numeric root moduli of characteristic polynomials.

#include <gmpxx.h>

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rsquad/error.hpp"

namespace rsquad {

inline constexpr unsigned kRulesCap = 10;

/// No recurrence can be certified from the given number of terms.
class InsufficientData : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The data admits no integer recurrence (the rational one has fractional coefficients).
class InconsistentData : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A backward step would leave the integers.
class NonIntegralStep : public DomainError {
 public:
  using DomainError::DomainError;
};

// ---------------------------------------------------------------------------
// Integer polynomials

/// Dense integer polynomial, coefficient of x^i at index i, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { trim(); }

  /// From coefficients listed highest degree first.
  static IntPoly from_descending(const std::vector<long long>& desc) {
    std::vector<mpz_class> c;
    for (auto it = desc.rbegin(); it != desc.rend(); ++it) c.emplace_back(static_cast<long>(*it));
    return IntPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; the zero polynomial reports 0.
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  IntPoly operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
  }

  /// Largest k with x^k dividing p.
  std::size_t x_valuation() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return k;
  }

  /// "x^7 - 2x^6 - 8x + 16"
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const mpz_class& a = c_[k];
      if (a == 0) continue;
      mpz_class mag = abs(a);
      if (s.empty())
        s += a < 0 ? "-" : "";
      else
        s += a < 0 ? " - " : " + ";
      if (mag != 1 || k == 0) s += mag.get_str();
      if (k >= 1) s += "x";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpz_class> c_;
};

// ---------------------------------------------------------------------------
// Integer matrices

class IntMatrix {
 public:
  explicit IntMatrix(std::size_t dim = 0) : n_(dim), a_(dim * dim, 0) {}

  static IntMatrix identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      detail::require(rows[i].size() == rows.size(), "matrix must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t dim() const { return n_; }
  mpz_class& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  std::vector<long> row_longs(std::size_t i) const {
    std::vector<long> r(n_);
    for (std::size_t j = 0; j < n_; ++j) r[j] = at(i, j).get_si();
    return r;
  }

  /// Row-oriented product; zero entries of the left factor are skipped.
  IntMatrix operator*(const IntMatrix& o) const {
    detail::require(n_ == o.n_, "dimension mismatch");
    IntMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        const mpz_class& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < n_; ++j)
          if (o.at(k, j) != 0) r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  IntMatrix operator-() const {
    IntMatrix r(*this);
    for (auto& x : r.a_) x = -x;
    return r;
  }

  IntMatrix scaled(const mpz_class& s) const {
    IntMatrix r(*this);
    for (auto& x : r.a_) x *= s;
    return r;
  }

  IntMatrix pow(unsigned e) const {
    IntMatrix r = identity(n_);
    for (unsigned i = 0; i < e; ++i) r = (*this) * r;
    return r;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<mpz_class> a_;
};

/// R(t): rows mu^i(1,0..,1,0..) and mu^i(1,0..,-1,0..), mu moving the last entry to the front.
inline IntMatrix rules_core(unsigned t) {
  detail::require(t >= 1, "t must be positive");
  if (t > kRulesCap) throw CapExceeded("rules matrices are capped at t=" + std::to_string(kRulesCap));
  const std::size_t h = std::size_t{1} << (t - 1);
  IntMatrix r(2 * h);
  for (std::size_t i = 0; i < h; ++i) {
    r.at(2 * i, i) = 1;
    r.at(2 * i, h + i) = 1;
    r.at(2 * i + 1, i) = 1;
    r.at(2 * i + 1, h + i) = -1;
  }
  return r;
}

/// R'(t): R(t) bordered by the column (0,...,0,2) and the row (0_h, 1_h, 2).
inline IntMatrix rules_matrix(unsigned t) {
  const IntMatrix core = rules_core(t);
  const std::size_t m = core.dim(), h = m / 2;
  IntMatrix r(m + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r.at(i, j) = core.at(i, j);
  for (std::size_t j = h; j < m; ++j) r.at(m, j) = 1;
  r.at(m, m) = 2;
  return r;
}

/// Sylvester-Hadamard M(t): M(1) = [[1,1],[1,-1]], M(t+1) = [[M,M],[M,-M]].
inline IntMatrix hadamard(unsigned t) {
  detail::require(t >= 1, "t must be positive");
  if (t > kRulesCap) throw CapExceeded("Hadamard matrices are capped at t=" + std::to_string(kRulesCap));
  const std::size_t m = std::size_t{1} << t;
  IntMatrix r(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r.at(i, j) = (std::popcount(i & j) & 1) ? -1 : 1;
  return r;
}

struct RulesIdentityReport {
  unsigned t = 0;
  bool rt_equals_hadamard = false;      // R(t)^t == M(t)
  bool r2t_is_scalar = false;           // R(t)^(2t) == 2^t I
  bool hadamard_square_is_scalar = false;  // M(t)^2 == 2^t I
};

/// Checks the matrix identities around R(t) and M(t) without assuming any of them.
inline RulesIdentityReport rules_identities(unsigned t) {
  RulesIdentityReport rep;
  rep.t = t;
  const IntMatrix r = rules_core(t), m = hadamard(t);
  const IntMatrix scalar = IntMatrix::identity(r.dim()).scaled(mpz_class(1) << t);
  const IntMatrix rt = r.pow(t);
  rep.rt_equals_hadamard = rt == m;
  rep.r2t_is_scalar = r * (r.pow(t - 1) * rt) == scalar;
  rep.hadamard_square_is_scalar = m * m == scalar;
  return rep;
}

// ---------------------------------------------------------------------------
// Exact minimal polynomial

namespace detail {

using QPoly = std::vector<mpq_class>;  // ascending, no trailing zeros

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly monic(QPoly p) {
  trim(p);
  if (p.empty()) return p;
  const mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline std::pair<QPoly, QPoly> qdivrem(QPoly a, const QPoly& b) {
  require(!b.empty(), "polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  QPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k] == 0) continue;
    const mpq_class f = a[k] / b.back();
    q[k - (b.size() - 1)] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[k - (b.size() - 1) + j] -= f * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline QPoly qgcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = qdivrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

inline QPoly qlcm(const QPoly& a, const QPoly& b) { return monic(qdivrem(qmul(a, b), qgcd(a, b)).first); }

/// Rows as (column, value) lists.
using SparseRows = std::vector<std::vector<std::pair<std::size_t, mpz_class>>>;

inline SparseRows sparse_rows(const IntMatrix& m) {
  SparseRows rows(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (m.at(i, j) != 0) rows[i].emplace_back(j, m.at(i, j));
  return rows;
}

inline std::vector<mpz_class> mat_vec(const SparseRows& m, const std::vector<mpz_class>& v) {
  std::vector<mpz_class> r(v.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& [j, a] : m[i])
      if (v[j] != 0) r[i] += a * v[j];
  return r;
}

/// Monic generator of {p : p(M) v = 0}, by exact elimination on v, Mv, M^2 v, ...
inline QPoly vector_minpoly(const SparseRows& m, std::vector<mpz_class> cur) {
  struct Row {
    std::vector<mpq_class> vec;
    std::size_t pivot;
    QPoly comb;  // vec = comb(M) v
  };
  std::vector<Row> basis;
  for (std::size_t k = 0;; ++k) {
    std::vector<mpq_class> w(cur.begin(), cur.end());
    QPoly comb(k + 1, 0);
    comb[k] = 1;
    for (const auto& b : basis) {
      if (w[b.pivot] == 0) continue;
      const mpq_class f = w[b.pivot];
      for (std::size_t j = 0; j < w.size(); ++j)
        if (b.vec[j] != 0) w[j] -= f * b.vec[j];
      for (std::size_t j = 0; j < b.comb.size(); ++j) comb[j] -= f * b.comb[j];
    }
    const auto nz = std::find_if(w.begin(), w.end(), [](const mpq_class& x) { return x != 0; });
    if (nz == w.end()) return monic(comb);
    const std::size_t p = static_cast<std::size_t>(nz - w.begin());
    const mpq_class inv = 1 / w[p];
    for (auto& x : w) x *= inv;
    for (auto& x : comb) x *= inv;
    basis.push_back({std::move(w), p, std::move(comb)});
    cur = mat_vec(m, cur);
  }
}

/// p scaled to integer coefficients.
inline std::vector<mpz_class> clear_denominators(const QPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p) l = lcm(l, mpz_class(c.get_den()));
  std::vector<mpz_class> r;
  for (const auto& c : p) r.emplace_back(mpz_class(c * l));
  return r;
}

/// p(M) e_i == 0, by Horner on the unit vector.
inline bool annihilates_unit(const SparseRows& m, const std::vector<mpz_class>& p, std::size_t i) {
  std::vector<mpz_class> y(m.size(), 0);
  for (std::size_t k = p.size(); k-- > 0;) {
    y = mat_vec(m, y);
    y[i] += p[k];
  }
  return std::all_of(y.begin(), y.end(), [](const mpz_class& x) { return x == 0; });
}

}  // namespace detail

/// Monic minimal polynomial over Q, returned with integer coefficients.
/// Computed as the lcm of the minimal polynomials of the unit vectors; a unit
/// vector already killed by the running lcm is skipped.
inline IntPoly minimal_polynomial(const IntMatrix& m) {
  detail::require(m.dim() >= 1, "empty matrix");
  if (m.dim() > 1100) throw CapExceeded("minimal_polynomial is capped at dimension 1100");
  const auto rows = detail::sparse_rows(m);
  detail::QPoly l{1};
  std::vector<mpz_class> l_int{1};
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (l.size() > 1 && detail::annihilates_unit(rows, l_int, i)) continue;
    std::vector<mpz_class> e(m.dim(), 0);
    e[i] = 1;
    l = detail::qlcm(l, detail::vector_minpoly(rows, std::move(e)));
    l_int = detail::clear_denominators(l);
  }
  std::vector<mpz_class> out;
  for (const auto& c : l) {
    detail::check(c.get_den() == 1, "minimal polynomial of an integer matrix has a fractional coefficient");
    out.emplace_back(c.get_num());
  }
  return IntPoly(std::move(out));
}

/// (x - 2)(x^(2t) - 2^t) = x^(2t+1) - 2x^(2t) - 2^t x + 2^(t+1).
inline IntPoly mrs_recursion_poly(unsigned t) {
  detail::require(t >= 1, "t must be positive");
  std::vector<mpz_class> c(2 * t + 2, 0);
  c[2 * t + 1] = 1;
  c[2 * t] = -2;
  c[1] = -(mpz_class(1) << t);
  c[0] = mpz_class(1) << (t + 1);
  return IntPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Recurrences

/// u(n) = sum_{j=1..r} c_j u(n-j), claimed for terms from valid_from on
/// (valid_from is the index of the first term that may serve as a seed).
struct RecurrenceSpec {
  std::vector<mpz_class> coeffs;  // c_1..c_r
  std::int64_t valid_from = 0;

  std::size_t order() const { return coeffs.size(); }

  /// x^r - sum_j c_j x^(r-j)
  IntPoly charpoly() const {
    const std::size_t r = order();
    std::vector<mpz_class> p(r + 1, 0);
    p[r] = 1;
    for (std::size_t j = 1; j <= r; ++j) p[r - j] = -coeffs[j - 1];
    return IntPoly(std::move(p));
  }

  static RecurrenceSpec from_charpoly(const IntPoly& p, std::int64_t valid_from) {
    detail::require(!p.is_zero() && p.degree() >= 1, "characteristic polynomial must have positive degree");
    detail::require(p.coeffs().back() == 1, "characteristic polynomial must be monic");
    detail::require(p.coeff(0) != 0, "characteristic polynomial must not be divisible by x");
    const std::size_t r = p.degree();
    RecurrenceSpec s;
    s.valid_from = valid_from;
    for (std::size_t j = 1; j <= r; ++j) s.coeffs.push_back(-p.coeff(r - j));
    return s;
  }

  /// "u(n) = 2u(n-1) + 4u(n-4) - 8u(n-5)"
  std::string to_string() const {
    std::string s = "u(n) =";
    bool first = true;
    for (std::size_t j = 1; j <= order(); ++j) {
      const mpz_class& c = coeffs[j - 1];
      if (c == 0) continue;
      const mpz_class mag = abs(c);
      s += first ? (c < 0 ? " -" : " ") : (c < 0 ? " - " : " + ");
      if (mag != 1) s += mag.get_str();
      s += "u(n-" + std::to_string(j) + ")";
      first = false;
    }
    if (first) s += " 0";
    return s;
  }

  /// True if seq (first term at index start) obeys the relation at index n.
  bool holds_at(const std::vector<mpz_class>& seq, std::int64_t start, std::int64_t n) const {
    const auto i = static_cast<std::size_t>(n - start);
    mpz_class acc = 0;
    for (std::size_t j = 1; j <= order(); ++j) acc += coeffs[j - 1] * seq[i - j];
    return acc == seq[i];
  }

  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

inline RecurrenceSpec mrs_recurrence(unsigned t) {
  return RecurrenceSpec::from_charpoly(mrs_recursion_poly(t), 2 * static_cast<std::int64_t>(t) + 1);
}

/// Shortest integer recurrence for seq, where seq[0] is the term at index start.
///
/// Berlekamp-Massey over Q. A linear complexity L is accepted only when at
/// least 2L + 4 terms were supplied. Trailing zero coefficients are dropped;
/// valid_from is then moved back as far as the shorter relation still holds.
inline RecurrenceSpec fit_recurrence(const std::vector<mpz_class>& seq, std::int64_t start) {
  using detail::QPoly;
  const std::size_t n_terms = seq.size();
  QPoly c{1}, b{1};
  std::size_t l = 0, m = 1;
  mpq_class bd = 1;
  for (std::size_t n = 0; n < n_terms; ++n) {
    mpq_class d = seq[n];
    for (std::size_t i = 1; i <= l && i < c.size(); ++i) d += c[i] * seq[n - i];
    if (d == 0) {
      ++m;
      continue;
    }
    const mpq_class f = d / bd;
    QPoly next = c;
    if (next.size() < b.size() + m) next.resize(b.size() + m, 0);
    for (std::size_t i = 0; i < b.size(); ++i) next[i + m] -= f * b[i];
    if (2 * l <= n) {
      b = c;
      bd = d;
      l = n + 1 - l;
      m = 1;
    } else {
      ++m;
    }
    c = std::move(next);
  }
  c.resize(l + 1, 0);

  if (l == 0) throw InsufficientData("the zero sequence has no recurrence of positive order");
  if (n_terms < 2 * l + 4)
    throw InsufficientData("linear complexity " + std::to_string(l) + " needs at least " +
                           std::to_string(2 * l + 4) + " terms, got " + std::to_string(n_terms));

  std::size_t r = l;
  while (r > 0 && c[r] == 0) --r;
  detail::check(r > 0, "recurrence degenerated to order 0");

  RecurrenceSpec s;
  for (std::size_t j = 1; j <= r; ++j) {
    const mpq_class cj = -c[j];
    if (cj.get_den() != 1)
      throw InconsistentData("rational recurrence of order " + std::to_string(r) +
                             " has a non-integral coefficient " + cj.get_str() + " at lag " + std::to_string(j));
    s.coeffs.emplace_back(cj.get_num());
  }

  // The relation of order r is guaranteed from relative index l on.
  std::size_t first_seed = l - r;
  s.valid_from = start;
  while (first_seed > 0 && s.holds_at(seq, start, start + static_cast<std::int64_t>(first_seed - 1 + r)))
    --first_seed;
  s.valid_from = start + static_cast<std::int64_t>(first_seed);
  for (std::int64_t n = s.valid_from + static_cast<std::int64_t>(r); n < start + static_cast<std::int64_t>(n_terms); ++n)
    detail::check(s.holds_at(seq, start, n), "fitted recurrence fails at n=" + std::to_string(n));
  return s;
}

enum class Direction { forward, backward };

/// Extends a run of exactly order() consecutive terms. Forward returns the
/// next count terms; backward returns the count terms before the seed, in
/// increasing index order.
inline std::vector<mpz_class> extend(const RecurrenceSpec& s, const std::vector<mpz_class>& seed, Direction dir,
                                     std::size_t count) {
  const std::size_t r = s.order();
  detail::require(r >= 1, "recurrence of order 0");
  detail::require(seed.size() == r, "seed must have exactly order() terms");
  if (dir == Direction::forward) {
    std::vector<mpz_class> w = seed;
    for (std::size_t k = 0; k < count; ++k) {
      mpz_class acc = 0;
      for (std::size_t j = 1; j <= r; ++j) acc += s.coeffs[j - 1] * w[w.size() - j];
      w.push_back(acc);
    }
    return {w.begin() + static_cast<std::ptrdiff_t>(r), w.end()};
  }
  const mpz_class& cr = s.coeffs[r - 1];
  detail::require(cr != 0, "backward extension needs a nonzero last coefficient");
  // Terms in decreasing index order; the last r entries are u(m+r-1), ..., u(m).
  std::vector<mpz_class> rev(seed.rbegin(), seed.rend());
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t top = rev.size() - r;
    mpz_class acc = rev[top];
    for (std::size_t j = 1; j < r; ++j) acc -= s.coeffs[j - 1] * rev[top + j];
    if (!mpz_divisible_p(acc.get_mpz_t(), cr.get_mpz_t()))
      throw NonIntegralStep("backward step " + std::to_string(k + 1) + " is not an integer");
    rev.push_back(acc / cr);
  }
  return {rev.rbegin(), rev.rbegin() + static_cast<std::ptrdiff_t>(count)};
}

// ---------------------------------------------------------------------------
// Root moduli

struct RootModulus {
  std::complex<long double> root;
  long double modulus = 0;
  long double dev_sqrt2 = 0;  // |modulus - sqrt(2)|
  long double dev_two = 0;    // |modulus - 2|
};

namespace detail {

inline std::complex<long double> horner(const std::vector<long double>& a, std::complex<long double> z,
                                        std::complex<long double>* deriv) {
  std::complex<long double> p = 0, dp = 0;
  for (std::size_t k = a.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
  }
  if (deriv) *deriv = dp;
  return p;
}

}  // namespace detail

/// Numeric roots (with multiplicity) from companion-matrix eigenvalues,
/// each polished by Newton steps in extended precision. Sorted by modulus, then argument.
inline std::vector<RootModulus> root_moduli(const IntPoly& p) {
  detail::require(!p.is_zero(), "the zero polynomial has no roots");
  std::vector<RootModulus> out;
  const std::size_t z = p.x_valuation();
  for (std::size_t i = 0; i < z; ++i)
    out.push_back({0, 0, std::sqrt(2.0L), 2.0L});

  std::vector<long double> a;
  for (std::size_t k = z; k < p.coeffs().size(); ++k) a.push_back(p.coeffs()[k].get_d());
  const std::size_t deg = a.size() - 1;
  if (deg >= 1) {
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
    for (std::size_t i = 1; i < deg; ++i) comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1;
    for (std::size_t i = 0; i < deg; ++i)
      comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) =
          static_cast<double>(-a[i] / a[deg]);
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    detail::check(es.info() == Eigen::Success, "eigenvalue iteration did not converge");
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      std::complex<long double> r(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
      for (int it = 0; it < 50; ++it) {
        std::complex<long double> d;
        const auto v = detail::horner(a, r, &d);
        if (std::abs(d) == 0) break;
        const auto step = v / d;
        r -= step;
        if (std::abs(step) <= 1e-18L * std::max(1.0L, std::abs(r))) break;
      }
      const long double mod = std::abs(r);
      out.push_back({r, mod, std::fabs(mod - std::sqrt(2.0L)), std::fabs(mod - 2.0L)});
    }
  }
  std::sort(out.begin(), out.end(), [](const RootModulus& x, const RootModulus& y) {
    if (x.modulus != y.modulus) return x.modulus < y.modulus;
    return std::arg(x.root) < std::arg(y.root);
  });
  return out;
}

}  // namespace rsquad
