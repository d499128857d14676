#pragma once

// Affine equivalence of quadratic RS functions, decided by the invariant pair
// (weight, nonlinearity), and class tables built from it.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rsquad/error.hpp"
#include "rsquad/form.hpp"
#include "rsquad/quadform.hpp"
#include "rsquad/rs_quadratic.hpp"

namespace rsquad {

inline constexpr unsigned kClassSlotCap = 24;
inline constexpr std::uint64_t kClassifyCap = 40;

inline Signature signature(const RsQuadratic& q, std::uint64_t n, Semantics sem) {
  return closed_form_report(q, n, sem).signature();
}

inline bool are_equivalent(const RsQuadratic& a, const RsQuadratic& b, std::uint64_t n, Semantics sem) {
  return signature(a, n, sem) == signature(b, n, sem);
}

struct ClassTable {
  std::uint64_t n = 0;
  Semantics semantics = Semantics::anf;
  /// Ordered by signature; members in enumeration order.
  std::map<Signature, std::vector<RsQuadratic>> classes;

  std::size_t class_count() const { return classes.size(); }
  std::size_t function_count() const {
    std::size_t s = 0;
    for (const auto& [sig, members] : classes) s += members.size();
    return s;
  }
  /// Position of sig in signature order, or nullopt.
  std::optional<std::size_t> class_id(const Signature& sig) const {
    std::size_t i = 0;
    for (const auto& [s, members] : classes) {
      if (s == sig) return i;
      ++i;
    }
    return std::nullopt;
  }
};

/// Number of positive divisors.
inline std::uint64_t divisor_count(std::uint64_t n) {
  detail::require(n >= 1, "divisor_count of zero");
  std::uint64_t c = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) c += (d * d == n) ? 1 : 2;
  return c;
}

/// (0,t)_n for 1 <= t <= n/2 in ANF, bucketed; there must be tau(n) - 1 classes.
inline ClassTable classify_mrs(std::uint64_t n) {
  detail::require(n >= 3, "classify_mrs needs n >= 3");
  ClassTable tab{n, Semantics::anf, {}};
  for (std::uint64_t t = 1; t <= n / 2; ++t) {
    RsQuadratic q({t});
    tab.classes[signature(q, n, Semantics::anf)].push_back(q);
  }
  detail::check(tab.class_count() == divisor_count(n) - 1,
                "MRS class count " + std::to_string(tab.class_count()) + " != tau(n)-1 = " +
                    std::to_string(divisor_count(n) - 1) + " at n=" + std::to_string(n));
  return tab;
}

/// Offsets that index the coefficient vector: 1..n/2 in ANF (the last one is
/// the short function when n is even), 1..(n-1)/2 in ORBIT.
inline std::uint64_t class_slots(std::uint64_t n, Semantics sem) {
  return sem == Semantics::anf ? n / 2 : (n - 1) / 2;
}

inline RsQuadratic quadratic_from_mask(std::uint64_t mask) {
  std::vector<std::uint64_t> offs;
  for (std::uint64_t m = mask; m; m &= m - 1) offs.push_back(static_cast<std::uint64_t>(std::countr_zero(m)) + 1);
  return RsQuadratic(std::move(offs));
}

/// Every nonzero coefficient vector (support size at most max_terms if given),
/// bucketed by signature. Work is split over `threads` workers.
inline ClassTable classify_all_rs(std::uint64_t n, Semantics sem = Semantics::anf,
                                  std::optional<unsigned> max_terms = std::nullopt, unsigned threads = 1) {
  detail::require(n >= 3, "classify_all_rs needs n >= 3");
  if (n > kClassifyCap) throw CapExceeded("classification is capped at n=" + std::to_string(kClassifyCap));
  const std::uint64_t slots = class_slots(n, sem);
  if (slots > kClassSlotCap)
    throw CapExceeded("classification is capped at " + std::to_string(kClassSlotCap) + " coefficient slots");
  const std::uint64_t total = std::uint64_t{1} << slots;

  std::vector<std::optional<Signature>> sigs(total);
  auto work = [&](std::uint64_t from, std::uint64_t step) {
    for (std::uint64_t mask = from; mask < total; mask += step) {
      if (mask == 0) continue;
      if (max_terms && static_cast<unsigned>(std::popcount(mask)) > *max_terms) continue;
      sigs[mask] = signature(quadratic_from_mask(mask), n, sem);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(threads);
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        try {
          work(w, threads);
        } catch (...) {
          errs[w] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }

  ClassTable tab{n, sem, {}};
  for (std::uint64_t mask = 1; mask < total; ++mask)
    if (sigs[mask]) tab.classes[*sigs[mask]].push_back(quadratic_from_mask(mask));
  return tab;
}

struct MinRepReport {
  std::uint64_t n = 0;
  std::size_t b_observed = 0;
  std::map<Signature, RsQuadratic> witness;  // a member of smallest support per class

  bool within_three() const { return b_observed <= 3; }
};

/// Smallest number of offsets needed to reach each class; B_observed is the worst class.
inline MinRepReport min_representative_terms(const ClassTable& tab) {
  MinRepReport r;
  r.n = tab.n;
  for (const auto& [sig, members] : tab.classes) {
    detail::check(!members.empty(), "empty class");
    const auto best = std::min_element(members.begin(), members.end(),
                                       [](const RsQuadratic& a, const RsQuadratic& b) { return a.size() < b.size(); });
    r.witness.emplace(sig, *best);
    r.b_observed = std::max(r.b_observed, best->size());
  }
  return r;
}

inline MinRepReport min_representative_terms(std::uint64_t n, Semantics sem = Semantics::anf, unsigned threads = 1) {
  return min_representative_terms(classify_all_rs(n, sem, std::nullopt, threads));
}

}  // namespace rsquad
