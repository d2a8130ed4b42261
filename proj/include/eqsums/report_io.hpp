// JSON / CSV emission and parsing for every report the CLI produces. All
// exact counts travel as decimal strings so downstream consumers never
// truncate them to 64-bit or double; parsing an emitted report reproduces
// the in-memory report exactly.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eqsums/bounds.hpp"
#include "eqsums/counting.hpp"
#include "eqsums/planes.hpp"
#include "eqsums/probe.hpp"
#include "eqsums/scaling.hpp"
#include "eqsums/singular.hpp"

namespace eqsums {

using json = nlohmann::ordered_json;

// ---- count reports ---------------------------------------------------------

inline json to_json(const CountReport& r) {
  json j;
  j["B"] = r.B;
  j["c"] = r.exponents.c;
  j["d"] = r.exponents.d;
  j["total_ordered"] = nat_to_string(r.total_ordered);
  j["trivial_ordered"] = nat_to_string(r.trivial_ordered);
  j["nontrivial_ordered"] = nat_to_string(r.nontrivial_ordered);
  if (r.primitive_nontrivial)
    j["primitive_nontrivial"] = nat_to_string(*r.primitive_nontrivial);
  return j;
}

inline CountReport count_report_from_json(const json& j) {
  CountReport r{j.at("B").get<std::uint32_t>(),
                ExponentPair(j.at("c").get<std::uint32_t>(), j.at("d").get<std::uint32_t>()),
                nat_from_string(j.at("total_ordered").get<std::string>()),
                nat_from_string(j.at("trivial_ordered").get<std::string>()),
                nat_from_string(j.at("nontrivial_ordered").get<std::string>()),
                std::nullopt};
  if (j.contains("primitive_nontrivial"))
    r.primitive_nontrivial = nat_from_string(j.at("primitive_nontrivial").get<std::string>());
  return r;
}

inline json to_json(const SolutionPair& p) {
  json j;
  j["left"] = {p.left.x0, p.left.x1, p.left.x2};
  j["right"] = {p.right.x0, p.right.x1, p.right.x2};
  j["key_sc"] = nat_to_string(p.key.sc);
  j["key_sd"] = nat_to_string(p.key.sd);
  j["height"] = p.height;
  j["gcd"] = p.gcd;
  return j;
}

// ---- scaling tables --------------------------------------------------------

inline json to_json(const ScalingTable& t, bool include_timing = true) {
  json j;
  j["c"] = t.exponents.c;
  j["d"] = t.exponents.d;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r;
    r["B"] = row.B;
    r["nontrivial"] = nat_to_string(row.nontrivial);
    if (row.primitive) r["primitive_nontrivial"] = nat_to_string(*row.primitive);
    if (include_timing) r["seconds"] = row.seconds;
    if (row.ratio_b3logb) r["ratio_b3logb"] = *row.ratio_b3logb;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  if (t.fitted_exponent) j["fitted_exponent"] = *t.fitted_exponent;
  j["fit_window"] = {{"B_min", t.fit_window.B_min}, {"B_max", t.fit_window.B_max}};
  return j;
}

inline ScalingTable scaling_table_from_json(const json& j) {
  ScalingTable t{ExponentPair(j.at("c").get<std::uint32_t>(), j.at("d").get<std::uint32_t>()),
                 {}, std::nullopt, {}};
  for (const auto& r : j.at("rows")) {
    ScalingRow row;
    row.B = r.at("B").get<std::uint32_t>();
    row.nontrivial = nat_from_string(r.at("nontrivial").get<std::string>());
    if (r.contains("primitive_nontrivial"))
      row.primitive = nat_from_string(r.at("primitive_nontrivial").get<std::string>());
    if (r.contains("seconds")) row.seconds = r.at("seconds").get<double>();
    if (r.contains("ratio_b3logb")) row.ratio_b3logb = r.at("ratio_b3logb").get<double>();
    t.rows.push_back(std::move(row));
  }
  if (j.contains("fitted_exponent")) t.fitted_exponent = j.at("fitted_exponent").get<double>();
  t.fit_window.B_min = j.at("fit_window").at("B_min").get<std::uint32_t>();
  t.fit_window.B_max = j.at("fit_window").at("B_max").get<std::uint32_t>();
  return t;
}

// CSV: one row per B. Header fixed, counts as plain decimal text.
inline std::string to_csv(const ScalingTable& t, bool include_timing = true) {
  std::ostringstream os;
  os << "B,nontrivial,primitive_nontrivial,seconds\n";
  for (const auto& row : t.rows) {
    os << row.B << ',' << nat_to_string(row.nontrivial) << ',';
    if (row.primitive) os << nat_to_string(*row.primitive);
    os << ',';
    if (include_timing) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", row.seconds);
      os << buf;
    } else {
      os << 0;
    }
    os << '\n';
  }
  return os.str();
}

inline std::string to_csv(const CountReport& r, double seconds = 0) {
  std::ostringstream os;
  os << "B,nontrivial,primitive_nontrivial,seconds\n";
  os << r.B << ',' << nat_to_string(r.nontrivial_ordered) << ',';
  if (r.primitive_nontrivial) os << nat_to_string(*r.primitive_nontrivial);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", seconds);
  os << ',' << buf << '\n';
  return os.str();
}

inline std::vector<ScalingRow> scaling_rows_from_csv(const std::string& csv) {
  std::istringstream is(csv);
  std::string line;
  if (!std::getline(is, line) || line != "B,nontrivial,primitive_nontrivial,seconds")
    throw std::invalid_argument("scaling_rows_from_csv: bad header");
  std::vector<ScalingRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
      std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos)
        throw std::invalid_argument("scaling_rows_from_csv: short row");
      cells.push_back(line.substr(pos, comma - pos));
      pos = comma + 1;
    }
    cells.push_back(line.substr(pos));
    ScalingRow row;
    row.B = std::uint32_t(std::stoul(cells[0]));
    row.nontrivial = nat_from_string(cells[1]);
    if (!cells[2].empty()) row.primitive = nat_from_string(cells[2]);
    row.seconds = std::stod(cells[3]);
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---- geometry reports ------------------------------------------------------

inline json to_json(const StandardPlane& p) {
  json j;
  j["degree"] = p.degree;
  json pairing = json::array(), roots = json::array(), signs = json::array();
  for (const auto& pr : p.pairing) pairing.push_back({pr.lo, pr.hi});
  for (const auto& r : p.roots)
    roots.push_back({{"numerator", r.numerator}, {"order", r.order}});
  for (auto s : p.signs) signs.push_back(int(s));
  j["pairing"] = std::move(pairing);
  j["roots"] = std::move(roots);
  j["signs"] = std::move(signs);
  return j;
}

inline json standard_planes_report(std::uint32_t k, bool list_planes = false) {
  auto planes = standard_planes(k);
  json j;
  j["k"] = k;
  j["count"] = std::uint64_t(planes.size());
  if (list_planes) {
    json arr = json::array();
    for (const auto& p : planes) arr.push_back(to_json(p));
    j["planes"] = std::move(arr);
  }
  return j;
}

inline json to_json(const PlaneCensus& c) {
  json j;
  j["c"] = c.exponents.c;
  j["d"] = c.exponents.d;
  j["total_on_x"] = c.total_on_x;
  j["total_rational_positive"] = c.total_rational_positive;
  json arr = json::array();
  for (const auto& p : c.planes) arr.push_back(to_json(p));
  j["planes"] = std::move(arr);
  return j;
}

inline json to_json(const LinearSpaceFamily& f) {
  json j;
  j["m"] = f.m;
  j["k"] = f.k;
  j["count"] = nat_to_string(f.count);
  return j;
}

inline json to_json(const ProbeReport& r) {
  json j;
  j["k"] = r.k;
  j["p"] = r.p;
  j["seed"] = r.seed;
  j["normal_form"] = "rowspace [I3 | M] over F_p";
  j["ab_partial_solutions"] = r.ab_partial_solutions;
  j["planes_found"] = r.planes_found;
  j["standard_count"] = r.standard_count;
  j["all_standard"] = r.all_standard;
  json bad = json::array();
  for (const auto& pl : r.nonstandard_examples) {
    json rows = json::array();
    for (const auto& row : pl.forms) rows.push_back({row[0], row[1], row[2]});
    bad.push_back(std::move(rows));
  }
  j["nonstandard_examples"] = std::move(bad);
  return j;
}

inline json to_json(const SingularReport& r) {
  json j;
  j["c"] = r.exponents.c;
  j["d"] = r.exponents.d;
  j["tolerance"] = r.tolerance;
  j["heuristic"] = r.heuristic;
  j["root_order"] = r.root_order;
  j["patterns_checked"] = r.patterns_checked;
  j["pattern_bound"] = r.pattern_bound;
  json arr = json::array();
  for (const auto& cand : r.candidates) {
    json c;
    json pat = json::array();
    for (const auto& slot : cand.pattern) {
      if (slot) pat.push_back(*slot); else pat.push_back(nullptr);
    }
    c["pattern"] = std::move(pat);
    c["residual_c"] = cand.residual_c;
    c["residual_d"] = cand.residual_d;
    c["max_minor"] = cand.max_minor;
    arr.push_back(std::move(c));
  }
  j["count"] = r.candidates.size();
  j["candidates"] = std::move(arr);
  return j;
}

inline json to_json(const BoundCatalog& cat) {
  json j;
  j["c"] = cat.exponents.c;
  j["d"] = cat.exponents.d;
  json arr = json::array();
  for (const auto& e : cat.entries()) {
    json b;
    b["name"] = e.name;
    b["num"] = e.exponent.num;
    b["den"] = e.exponent.den;
    b["exponent"] = e.exponent.value();
    arr.push_back(std::move(b));
  }
  j["bounds"] = std::move(arr);
  if (auto best = cat.smallest()) j["smallest"] = best->name;
  return j;
}

}  // namespace eqsums
