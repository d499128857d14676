#pragma once

// JSON/CSV/text renderings of the library's reports, and the raw truth-table dump.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rsquad/balance.hpp"
#include "rsquad/boolfun.hpp"
#include "rsquad/equiv.hpp"
#include "rsquad/form.hpp"
#include "rsquad/quadform.hpp"
#include "rsquad/recursion.hpp"
#include "rsquad/rs_quadratic.hpp"
#include "rsquad/verify.hpp"

namespace rsquad {

using Json = nlohmann::json;

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
inline Json big_to_json(const mpz_class& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    std::int64_t v = 0;
    std::istringstream(z.get_str()) >> v;
    return v;
  }
  return z.get_str();
}

inline mpz_class big_from_json(const Json& j) {
  if (j.is_string()) return mpz_class(j.get<std::string>());
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  return mpz_class(std::to_string(j.get<std::int64_t>()));
}

inline Json to_json(const AnalysisReport& r) {
  return {{"offsets", r.q.offsets()},
          {"q", r.q.to_string()},
          {"n", r.n},
          {"semantics", to_string(r.semantics)},
          {"v", r.v},
          {"d", r.d},
          {"balanced", r.balanced},
          {"dickson_b", to_string(r.dickson_b)},
          {"weight", r.weight},
          {"nonlinearity", r.nonlinearity},
          {"method", r.method}};
}

inline Json to_json(const RsQuadratic& q, const VPeriod& p) {
  std::uint64_t kmax = 0;
  for (std::size_t i = 0; i < p.values.size(); ++i)
    if (p.values[i] == 2 * q.J()) kmax = p.start + i;
  return {{"q", q.to_string()},
          {"period", p.period},
          {"start", p.start},
          {"values", p.values},
          {"max_value", 2 * q.J()},
          {"max_at", kmax},
          {"symmetric", true}};
}

inline Json to_json(const RsQuadratic& q, const BalanceProfile& p) {
  std::vector<int> bits;
  for (bool b : p.witness) bits.push_back(b ? 1 : 0);
  Json j = {{"q", q.to_string()}, {"shape", to_string(p.shape)}, {"dQ", p.dQ}, {"nuQ", p.nuQ},
            {"witness", bits},    {"rule", p.describe()}};
  if (p.shape == ProfileShape::never) {
    j["k"] = nullptr;
    j["c_or_d"] = nullptr;
  } else {
    j["k"] = p.k;
    j["c_or_d"] = p.c_or_d();
  }
  return j;
}

inline Json to_json(const IntPoly& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(big_to_json(x));
  return c;
}

inline Json to_json(const RecurrenceSpec& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(big_to_json(c));
  return {{"order", s.order()},
          {"coeffs", coeffs},
          {"charpoly", s.charpoly().to_string()},
          {"charpoly_coeffs", to_json(s.charpoly())},
          {"valid_from", s.valid_from},
          {"relation", s.to_string()}};
}

inline RecurrenceSpec recurrence_from_json(const Json& j) {
  RecurrenceSpec s;
  for (const auto& c : j.at("coeffs")) s.coeffs.push_back(big_from_json(c));
  s.valid_from = j.at("valid_from").get<std::int64_t>();
  detail::require(s.order() == j.at("order").get<std::size_t>(), "order does not match coefficient count");
  return s;
}

inline Json to_json(const std::vector<mpz_class>& seq) {
  Json a = Json::array();
  for (const auto& x : seq) a.push_back(big_to_json(x));
  return a;
}

inline Json to_json(const std::vector<RootModulus>& roots) {
  Json a = Json::array();
  for (const auto& r : roots)
    a.push_back({{"re", static_cast<double>(r.root.real())},
                 {"im", static_cast<double>(r.root.imag())},
                 {"modulus", static_cast<double>(r.modulus)},
                 {"dev_sqrt2", static_cast<double>(r.dev_sqrt2)},
                 {"dev_two", static_cast<double>(r.dev_two)}});
  return a;
}

inline Json to_json(const ClassTable& t) {
  Json classes = Json::array();
  std::size_t id = 0;
  for (const auto& [sig, members] : t.classes) {
    std::vector<std::string> ms;
    for (const auto& q : members) ms.push_back(q.to_string());
    classes.push_back({{"id", id++}, {"weight", sig.weight}, {"nonlinearity", sig.nonlinearity},
                       {"size", members.size()}, {"members", ms}});
  }
  return {{"n", t.n},
          {"semantics", to_string(t.semantics)},
          {"class_count", t.class_count()},
          {"function_count", t.function_count()},
          {"classes", classes}};
}

/// One row per function: offsets, weight, nonlinearity, class id.
inline Json class_rows(const ClassTable& t) {
  Json rows = Json::array();
  std::size_t id = 0;
  for (const auto& [sig, members] : t.classes) {
    for (const auto& q : members)
      rows.push_back({{"offsets", q.to_string()}, {"weight", sig.weight}, {"nonlinearity", sig.nonlinearity},
                      {"class_id", id}});
    ++id;
  }
  return rows;
}

inline Json to_json(const MinRepReport& r) {
  Json classes = Json::array();
  for (const auto& [sig, q] : r.witness)
    classes.push_back({{"weight", sig.weight}, {"nonlinearity", sig.nonlinearity}, {"min_terms", q.size()},
                       {"witness", q.to_string()}});
  return {{"n", r.n}, {"B_observed", r.b_observed}, {"within_three", r.within_three()}, {"classes", classes}};
}

inline Json to_json(const TraceCheck& c) {
  return {{"w_cube", c.w_cube},
          {"w_field", c.w_field},
          {"magnitudes_agree", c.magnitudes_agree},
          {"balanced_agree", c.balanced_agree}};
}

// ---------------------------------------------------------------------------
// Flat renderings

namespace detail {

inline std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ";") + cell(x);
    return s;
  }
  if (v.is_null()) return "";
  return v.dump();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

inline std::vector<std::string> columns(const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  return cols;
}

}  // namespace detail

/// Rows (an array of flat objects) as CSV with a header line.
inline void write_csv(std::ostream& os, const Json& rows) {
  const auto cols = detail::columns(rows);
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      os << (i ? "," : "") << detail::csv_escape(r.contains(cols[i]) ? detail::cell(r[cols[i]]) : "");
    os << "\n";
  }
}

/// Scalar (and scalar-array) fields of head as "key: value", then rows as an aligned table.
inline void write_text(std::ostream& os, const Json& head, const Json& rows) {
  if (head.is_object())
    for (const auto& [k, v] : head.items())
      if (!v.is_object() && !(v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& x) { return x.is_structured(); })))
        os << k << ": " << detail::cell(v) << "\n";
  if (!rows.is_array() || rows.empty()) return;
  const auto cols = detail::columns(rows);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    width[i] = cols[i].size();
    for (const auto& r : rows) width[i] = std::max(width[i], detail::cell(r.value(cols[i], Json())).size());
  }
  auto line = [&](auto get) {
    std::string s;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      std::string c = get(i);
      if (i + 1 < cols.size()) c.resize(width[i] + 2, ' ');
      s += c;
    }
    os << s << "\n";
  };
  line([&](std::size_t i) { return cols[i]; });
  for (const auto& r : rows) line([&](std::size_t i) { return detail::cell(r.value(cols[i], Json())); });
}

// ---------------------------------------------------------------------------
// Raw table dump

/// Writes prefix.bin (bit v of the table at byte v/8, bit v%8) and prefix.json
/// ({n, semantics, offsets}).
inline void write_table_dump(const std::string& prefix, const TruthTable& t, const RsQuadratic& q, Semantics sem) {
  std::ofstream bin(prefix + ".bin", std::ios::binary);
  detail::require(static_cast<bool>(bin), "cannot open " + prefix + ".bin");
  const std::uint64_t bytes = std::max<std::uint64_t>(1, t.size() / 8);
  for (std::uint64_t b = 0; b < bytes; ++b) {
    const std::uint64_t word = t.words()[b / 8];
    bin.put(static_cast<char>((word >> (8 * (b % 8))) & 0xFFu));
  }
  std::ofstream hdr(prefix + ".json");
  detail::require(static_cast<bool>(hdr), "cannot open " + prefix + ".json");
  hdr << Json{{"n", t.n()}, {"semantics", to_string(sem)}, {"offsets", q.offsets()}}.dump(2) << "\n";
}

/// Reads back a dump written by write_table_dump.
inline TruthTable read_table_dump(const std::string& prefix) {
  std::ifstream hdr(prefix + ".json");
  detail::require(static_cast<bool>(hdr), "cannot open " + prefix + ".json");
  const Json h = Json::parse(hdr);
  TruthTable t(h.at("n").get<unsigned>());
  std::ifstream bin(prefix + ".bin", std::ios::binary);
  detail::require(static_cast<bool>(bin), "cannot open " + prefix + ".bin");
  std::vector<char> buf((std::istreambuf_iterator<char>(bin)), std::istreambuf_iterator<char>());
  for (std::uint64_t v = 0; v < t.size(); ++v) {
    detail::require(v / 8 < buf.size(), "table dump is truncated");
    t.set(v, (static_cast<unsigned char>(buf[v / 8]) >> (v % 8)) & 1u);
  }
  return t;
}

}  // namespace rsquad
