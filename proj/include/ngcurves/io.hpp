#pragma once

/**
 * @file io.hpp
 * @brief Text, JSON and CSV renderings of classification records and scan
 * reports. All output is deterministic for a given input.
 */

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "canonical.hpp"
#include "classify.hpp"
#include "curve.hpp"

namespace ngcurves::io {

using nlohmann::json;

inline json point_json(Point p) { return json::array({p.x, p.y}); }
inline Point point_from_json(const json& j) { return {j.at(0).get<Int>(), j.at(1).get<Int>()}; }

inline json movement_json(const MovementChain& m) {
  json ts = json::array();
  for (const auto& t : m.translates) ts.push_back({{"u", point_json(t.u)}, {"covered", t.covered}});
  return {{"translates", ts}};
}

inline MovementChain movement_from_json(const json& j) {
  MovementChain m;
  for (const auto& t : j.at("translates"))
    m.translates.push_back({point_from_json(t.at("u")), t.at("covered").get<std::vector<Int>>()});
  m.covers_all = true;
  return m;
}

/// Keys follow the record schema; absent optionals are omitted.
inline json to_json(const ClassificationRecord& r) {
  json j;
  j["sequence"] = r.seq.values();
  j["cm"] = r.cm;
  if (r.gorenstein) j["gorenstein"] = *r.gorenstein;
  if (r.nearly_gorenstein) j["nearly_gorenstein"] = *r.nearly_gorenstein;
  if (r.level) j["level"] = *r.level;
  if (r.cm_type) j["cm_type"] = *r.cm_type;
  if (r.canonical_gens) {
    json g = json::array();
    for (Point p : *r.canonical_gens) g.push_back(point_json(p));
    j["canonical_generators"] = g;
  }
  if (r.movement) j["movement"] = movement_json(*r.movement);
  if (r.witness) j["witness"] = point_json(*r.witness);
  return j;
}

/// Inverse of to_json. Degrees and V_min size are recomputed from the
/// generators since the schema does not carry them.
inline ClassificationRecord record_from_json(const json& j) {
  ClassificationRecord r{Sequence(j.at("sequence").get<std::vector<Int>>())};
  r.cm = j.at("cm").get<bool>();
  if (j.contains("gorenstein")) r.gorenstein = j["gorenstein"].get<bool>();
  if (j.contains("nearly_gorenstein")) r.nearly_gorenstein = j["nearly_gorenstein"].get<bool>();
  if (j.contains("level")) r.level = j["level"].get<bool>();
  if (j.contains("cm_type")) r.cm_type = j["cm_type"].get<Int>();
  if (j.contains("canonical_generators")) {
    std::vector<Point> gens;
    std::vector<Int> degs;
    const Int an = r.seq.back();
    for (const auto& p : j["canonical_generators"]) {
      gens.push_back(point_from_json(p));
      degs.push_back(ngcurves::detail::floor_div(gens.back().x + gens.back().y, an));
    }
    Int vmin = 0;
    if (!degs.empty()) {
      const Int lo = *std::min_element(degs.begin(), degs.end());
      vmin = std::count(degs.begin(), degs.end(), lo);
    }
    r.canonical_gens = std::move(gens);
    r.canonical_degrees = std::move(degs);
    r.vmin_size = vmin;
  }
  if (j.contains("movement")) r.movement = movement_from_json(j["movement"]);
  if (j.contains("witness")) r.witness = point_from_json(j["witness"]);
  return r;
}

inline json to_json(const ScanReport& rep) {
  json recs = json::array();
  for (const auto& r : rep.records) recs.push_back(to_json(r));
  auto seqs = [](const std::set<Sequence>& s) {
    json a = json::array();
    for (const auto& q : s) a.push_back(q.values());
    return a;
  };
  return {{"n", rep.n},
          {"max_an", rep.max_an},
          {"records", recs},
          {"ng_found", seqs(rep.ng_found)},
          {"ng_expected", seqs(rep.ng_expected)},
          {"verdict", rep.verdict}};
}

// ---------------------------------------------------------------------------
// CSV

inline const char* kCsvHeader =
    "n,sequence,cm,gorenstein,nearly_gorenstein,level,cm_type,vmin_size,canonical_degrees,movement";

namespace detail {

template <class T>
std::string join(const std::vector<T>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

inline std::string opt_bool(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

template <class T>
std::string opt_num(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "";
}

}  // namespace detail

/// List-valued fields are space separated so no quoting is ever needed.
inline std::string to_csv_row(const ClassificationRecord& r) {
  std::string row = std::to_string(r.seq.size());
  row += "," + to_string(r.seq, " ");
  row += std::string(",") + (r.cm ? "true" : "false");
  row += "," + detail::opt_bool(r.gorenstein);
  row += "," + detail::opt_bool(r.nearly_gorenstein);
  row += "," + detail::opt_bool(r.level);
  row += "," + detail::opt_num(r.cm_type);
  row += "," + detail::opt_num(r.vmin_size);
  row += "," + (r.canonical_degrees ? detail::join(*r.canonical_degrees, " ") : std::string());
  row += "," + (r.movement ? detail::join(r.movement->movement(), " ") : std::string());
  return row;
}

inline std::string to_csv(const std::vector<ClassificationRecord>& rs) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rs) out += to_csv_row(r) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Text

inline std::string points_text(const std::vector<Point>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? " " : "") + to_string(ps[i]);
  return out;
}

inline std::string to_text(const ClassificationRecord& r) {
  std::ostringstream os;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  os << "sequence: " << to_string(r.seq, " ") << "\n";
  os << "cohen-macaulay: " << yn(r.cm) << "\n";
  if (!r.cm) {
    os << "witness: " << (r.witness ? to_string(*r.witness) : std::string("not found")) << "\n";
    return os.str();
  }
  os << "gorenstein: " << yn(*r.gorenstein) << "\n";
  os << "nearly gorenstein: " << yn(*r.nearly_gorenstein) << "\n";
  os << "level: " << yn(*r.level) << "\n";
  os << "cm type: " << *r.cm_type << "\n";
  os << "canonical generators: " << points_text(*r.canonical_gens) << "\n";
  os << "canonical degrees: " << detail::join(*r.canonical_degrees, " ") << "\n";
  if (r.movement) os << "movement: " << render_movement(*r.movement, r.seq) << "\n";
  return os.str();
}

inline std::string to_text(const ScanReport& rep) {
  std::ostringstream os;
  std::size_t cm = 0;
  std::size_t gor = 0;
  std::size_t ng = 0;
  for (const auto& r : rep.records) {
    cm += r.cm;
    gor += r.gorenstein.value_or(false);
    ng += r.nearly_gorenstein.value_or(false);
  }
  os << "n: " << rep.n << "\n";
  os << "max a_n: " << rep.max_an << "\n";
  os << "sequences: " << rep.records.size() << "\n";
  os << "cohen-macaulay: " << cm << "\n";
  os << "gorenstein: " << gor << "\n";
  os << "nearly gorenstein: " << ng << "\n";
  os << "nearly gorenstein, not gorenstein: " << rep.ng_found.size() << "\n";
  for (const auto& s : rep.ng_found) os << "  " << to_string(s, " ") << "\n";
  if (rep.ng_found != rep.ng_expected) {
    for (const auto& s : rep.ng_expected)
      if (!rep.ng_found.count(s)) os << "missing: " << to_string(s, " ") << "\n";
    for (const auto& s : rep.ng_found)
      if (!rep.ng_expected.count(s)) os << "unexpected: " << to_string(s, " ") << "\n";
  }
  os << "verdict: " << (rep.verdict ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace ngcurves::io
