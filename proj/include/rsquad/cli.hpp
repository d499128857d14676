#pragma once

// Command-line front end. run() takes the arguments after the program name and
// returns the process exit status: 0 ok, 1 usage or domain error, 2 falsified check.

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "rsquad/balance.hpp"
#include "rsquad/boolfun.hpp"
#include "rsquad/equiv.hpp"
#include "rsquad/error.hpp"
#include "rsquad/form.hpp"
#include "rsquad/quadform.hpp"
#include "rsquad/recursion.hpp"
#include "rsquad/rs_quadratic.hpp"
#include "rsquad/serialize.hpp"
#include "rsquad/verify.hpp"

namespace rsquad::cli {

struct Range {
  std::uint64_t lo = 0, hi = 0;
};

/// "A..B" (inclusive) or a single "A".
inline Range parse_range(const std::string& s) {
  auto num = [&](const std::string& t) {
    detail::require(!t.empty() && t.find_first_not_of("0123456789") == std::string::npos,
                    "bad range '" + s + "' (expected A or A..B)");
    return std::stoull(t);
  };
  const auto dots = s.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = num(s);
  } else {
    r.lo = num(s.substr(0, dots));
    r.hi = num(s.substr(dots + 2));
  }
  detail::require(r.lo <= r.hi, "empty range '" + s + "'");
  return r;
}

enum class Format { json, csv, text };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw DomainError("unknown format '" + s + "' (expected json|csv|text)");
}

/// What a subcommand produced: the full document and its flat rows.
struct Output {
  Json doc;
  Json rows = Json::array();
};

inline void emit(const Output& o, Format f, std::ostream& os) {
  switch (f) {
    case Format::json: os << o.doc.dump(2) << "\n"; break;
    case Format::csv: write_csv(os, o.rows.empty() ? Json::array({o.doc}) : o.rows); break;
    case Format::text: write_text(os, o.doc, o.rows); break;
  }
}

// ---------------------------------------------------------------------------
// Subcommands

inline Output cmd_analyze(const RsQuadratic& q, Range n, Semantics sem, const std::string& dump) {
  Output o;
  Json reports = Json::array();
  for (std::uint64_t m = n.lo; m <= n.hi; ++m) {
    const AnalysisReport r = closed_form_report(q, m, sem);
    Json j = to_json(r);
    // The short function (0,t)_(2t): flag the quoted formula, which disagrees with the true weight.
    if (sem == Semantics::anf && q.size() == 1 && m == 2 * q.J()) {
      if (auto quoted = quoted_short_bent_weight(q.J())) {
        j["quoted_short_bent_weight"] = *quoted;
        j["quoted_formula_matches"] = static_cast<std::uint64_t>(*quoted) == r.weight;
      }
    }
    reports.push_back(j);
  }
  if (!dump.empty()) {
    detail::require(n.lo == n.hi, "--dump needs a single n");
    write_table_dump(dump, table_from_anf(q, static_cast<unsigned>(n.lo), sem), q, sem);
  }
  o.rows = reports;
  o.doc = reports.size() == 1 ? reports[0] : reports;
  return o;
}

inline Output cmd_period(const RsQuadratic& q) {
  const VPeriod p = v_period(q);
  Output o;
  o.doc = to_json(q, p);
  for (std::size_t i = 0; i < p.values.size(); ++i) o.rows.push_back({{"n", p.start + i}, {"v", p.values[i]}});
  return o;
}

inline Output cmd_profile(const RsQuadratic& q) {
  const BalanceProfile p = profile(q);
  Output o;
  o.doc = to_json(q, p);
  for (std::size_t nu = 0; nu < p.witness.size(); ++nu)
    o.rows.push_back({{"nu", nu}, {"n", std::uint64_t{1} << nu}, {"balanced", static_cast<bool>(p.witness[nu])}});
  return o;
}

struct RecursionArgs {
  std::optional<unsigned> mrs;
  std::optional<RsQuadratic> q;
  std::optional<Range> n;
  Semantics sem = Semantics::orbit;
  std::size_t backward = 0;
  std::size_t forward = 0;
  bool roots = false;
};

inline Output cmd_recursion(const RecursionArgs& a) {
  Output o;
  RecurrenceSpec spec;
  std::vector<mpz_class> seq;
  std::int64_t start = 0;
  if (a.mrs) {
    spec = mrs_recurrence(*a.mrs);
    o.doc = to_json(spec);
    o.doc["source"] = "mrs";
    o.doc["t"] = *a.mrs;
    // Seed with true ANF weights from valid_from.
    start = spec.valid_from;
    for (std::size_t k = 0; k < spec.order(); ++k)
      seq.emplace_back(std::to_string(
          closed_form_report(RsQuadratic({*a.mrs}), static_cast<std::uint64_t>(start) + k, Semantics::anf).weight));
  } else {
    detail::require(a.q && a.n, "recursion needs either --mrs T or both --q and --n");
    start = static_cast<std::int64_t>(a.n->lo);
    for (std::uint64_t m = a.n->lo; m <= a.n->hi; ++m)
      seq.emplace_back(std::to_string(closed_form_report(*a.q, m, a.sem).weight));
    spec = fit_recurrence(seq, start);
    o.doc = to_json(spec);
    o.doc["source"] = "fit";
    o.doc["q"] = a.q->to_string();
    o.doc["semantics"] = to_string(a.sem);
    o.doc["sequence_start"] = start;
    o.doc["sequence"] = to_json(seq);
  }
  const std::int64_t seed_at = spec.valid_from;
  const auto seed_begin = seq.begin() + (seed_at - start);
  const std::vector<mpz_class> seed(seed_begin, seed_begin + static_cast<std::ptrdiff_t>(spec.order()));
  if (a.backward) {
    o.doc["backward_start"] = seed_at - static_cast<std::int64_t>(a.backward);
    o.doc["backward"] = to_json(extend(spec, seed, Direction::backward, a.backward));
  }
  if (a.forward) {
    const std::vector<mpz_class> tail(seq.end() - static_cast<std::ptrdiff_t>(spec.order()), seq.end());
    o.doc["forward_start"] = start + static_cast<std::int64_t>(seq.size());
    o.doc["forward"] = to_json(extend(spec, tail, Direction::forward, a.forward));
  }
  if (a.roots) o.doc["roots"] = to_json(root_moduli(spec.charpoly()));
  for (std::size_t j = 1; j <= spec.order(); ++j) o.rows.push_back({{"lag", j}, {"coeff", big_to_json(spec.coeffs[j - 1])}});
  return o;
}

inline Output cmd_classify(std::uint64_t n, Semantics sem, bool mrs_only, std::optional<unsigned> max_terms,
                           unsigned threads) {
  const ClassTable t = mrs_only ? classify_mrs(n) : classify_all_rs(n, sem, max_terms, threads);
  Output o;
  o.doc = to_json(t);
  if (mrs_only) o.doc["expected_class_count"] = divisor_count(n) - 1;
  o.rows = class_rows(t);
  return o;
}

inline Output cmd_minreps(Range n, Semantics sem, unsigned threads) {
  Output o;
  Json all = Json::array();
  std::size_t b_max = 0;
  for (std::uint64_t m = n.lo; m <= n.hi; ++m) {
    const MinRepReport r = min_representative_terms(m, sem, threads);
    b_max = std::max(b_max, r.b_observed);
    all.push_back(to_json(r));
    o.rows.push_back({{"n", m}, {"classes", r.witness.size()}, {"B_observed", r.b_observed}});
  }
  o.doc = {{"semantics", to_string(sem)}, {"B_observed", b_max}, {"within_three", b_max <= 3}, {"per_n", all}};
  return o;
}

inline Output cmd_tracecheck(const RsQuadratic& q, Range n, bool& all_ok) {
  Output o;
  all_ok = true;
  for (std::uint64_t m = n.lo; m <= n.hi; ++m) {
    const TraceCheck c = trace_check(q, static_cast<unsigned>(m));
    Json j = to_json(c);
    j["n"] = m;
    o.rows.push_back(j);
    all_ok = all_ok && c.magnitudes_agree && c.balanced_agree;
  }
  o.doc = {{"q", q.to_string()}, {"all_agree", all_ok}, {"checks", o.rows}};
  return o;
}

inline Output cmd_verify(const VerifyCaps& caps) {
  const VerifySummary s = verify_all(caps);
  Output o;
  std::uint64_t total = 0;
  for (const auto& [k, v] : s) {
    o.rows.push_back({{"check", k}, {"count", v}});
    total += v;
  }
  o.doc = {{"status", "ok"},
           {"total", total},
           {"counts", s},
           {"caps",
            {{"max_J", caps.max_J},
             {"max_n", caps.max_n},
             {"trace_J", caps.trace_J},
             {"trace_n", caps.trace_n},
             {"profile_n", caps.profile_n},
             {"classify_n", caps.classify_n}}}};
  return o;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic rotation symmetric Boolean function toolkit", "rsqtool"};
  app.require_subcommand(1);

  std::string q_text, n_text, sem_text, format_text = "json", out_path, dump_prefix;
  auto common = [&](CLI::App* sub, bool with_q, bool with_n, bool with_sem) {
    if (with_q) sub->add_option("--q", q_text, "offsets, e.g. 3,4 (strictly ascending, positive)");
    if (with_n) sub->add_option("--n", n_text, "n or an inclusive range A..B");
    if (with_sem) sub->add_option("--semantics", sem_text, "anf|orbit");
    sub->add_option("--format", format_text, "json|csv|text")->capture_default_str();
    sub->add_option("--out", out_path, "write the report to FILE instead of stdout");
  };

  auto* analyze = app.add_subcommand("analyze", "weight, nonlinearity, rank for (q, n); --semantics defaults to anf");
  common(analyze, true, true, true);
  analyze->add_option("--dump", dump_prefix, "write the truth table to PREFIX.bin / PREFIX.json");

  auto* period = app.add_subcommand("period", "one period of n -> v(n)");
  common(period, true, false, false);

  auto* prof = app.add_subcommand("profile", "for which n the trace form is balanced (orbit semantics)");
  common(prof, true, false, true);

  RecursionArgs rec;
  unsigned mrs_t = 0;
  auto* recursion = app.add_subcommand("recursion", "weight recursion; --semantics defaults to orbit");
  common(recursion, true, true, true);
  recursion->add_option("--mrs", mrs_t, "closed-form recursion for (0,t)_n");
  recursion->add_option("--backward", rec.backward, "extend this many terms before the first seed");
  recursion->add_option("--forward", rec.forward, "extend this many terms past the data");
  recursion->add_flag("--roots", rec.roots, "report numeric root moduli of the characteristic polynomial");

  bool mrs_only = false;
  std::optional<unsigned> max_terms;
  unsigned threads = 1;
  auto* classify = app.add_subcommand("classify", "affine classes by (weight, nonlinearity); --semantics defaults to anf");
  common(classify, false, true, true);
  classify->add_flag("--mrs", mrs_only, "only the monomial functions (0,t)_n");
  classify->add_option("--max-terms", max_terms, "cap the number of offsets");
  classify->add_option("--threads", threads, "worker threads (0 = hardware)");

  auto* minreps = app.add_subcommand("minreps", "fewest offsets reaching each class; --semantics defaults to anf");
  common(minreps, false, true, true);
  minreps->add_option("--threads", threads, "worker threads (0 = hardware)");

  auto* tracecheck = app.add_subcommand("tracecheck", "W(0) on GF(2)^n against the trace form on GF(2^n), n <= 16");
  common(tracecheck, true, true, false);

  VerifyCaps caps;
  auto* verify = app.add_subcommand("verify", "cross-check closed forms against brute force");
  common(verify, false, false, false);
  verify->add_option("--max-J", caps.max_J, "largest offset for table checks")->capture_default_str();
  verify->add_option("--max-n", caps.max_n, "largest n for table checks")->capture_default_str();
  verify->add_option("--trace-J", caps.trace_J, "largest offset for trace checks")->capture_default_str();
  verify->add_option("--trace-n", caps.trace_n, "largest n for trace checks")->capture_default_str();
  verify->add_option("--profile-n", caps.profile_n, "largest n for profile checks")->capture_default_str();
  verify->add_option("--classify-n", caps.classify_n, "largest n for MRS class counts")->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const Format fmt = parse_format(format_text);
    auto need_q = [&] {
      detail::require(!q_text.empty(), "--q is required");
      return RsQuadratic::parse(q_text);
    };
    auto need_n = [&] {
      detail::require(!n_text.empty(), "--n is required");
      return parse_range(n_text);
    };
    auto sem_or = [&](Semantics dflt) { return sem_text.empty() ? dflt : parse_semantics(sem_text); };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

    Output o;
    int status = 0;
    if (analyze->parsed()) {
      o = cmd_analyze(need_q(), need_n(), sem_or(Semantics::anf), dump_prefix);
    } else if (period->parsed()) {
      o = cmd_period(need_q());
    } else if (prof->parsed()) {
      detail::require(sem_or(Semantics::orbit) == Semantics::orbit, "profile is defined for orbit semantics only");
      o = cmd_profile(need_q());
    } else if (recursion->parsed()) {
      if (recursion->count("--mrs")) rec.mrs = mrs_t;
      if (!q_text.empty()) rec.q = RsQuadratic::parse(q_text);
      if (!n_text.empty()) rec.n = parse_range(n_text);
      rec.sem = sem_or(Semantics::orbit);
      o = cmd_recursion(rec);
    } else if (classify->parsed()) {
      const Range n = need_n();
      detail::require(n.lo == n.hi, "classify takes a single n");
      o = cmd_classify(n.lo, sem_or(Semantics::anf), mrs_only, max_terms, threads);
    } else if (minreps->parsed()) {
      o = cmd_minreps(need_n(), sem_or(Semantics::anf), threads);
    } else if (tracecheck->parsed()) {
      bool ok = true;
      o = cmd_tracecheck(need_q(), need_n(), ok);
      if (!ok) {
        err << "trace correspondence fails for q={" << q_text << "}\n";
        status = 2;
      }
    } else if (verify->parsed()) {
      o = cmd_verify(caps);
    }

    if (out_path.empty()) {
      emit(o, fmt, out);
    } else {
      std::ofstream f(out_path);
      detail::require(static_cast<bool>(f), "cannot open " + out_path);
      emit(o, fmt, f);
    }
    return status;
  } catch (const Falsification& e) {
    err << "FALSIFIED: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace rsquad::cli
