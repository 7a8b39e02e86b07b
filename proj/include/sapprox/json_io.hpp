#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sapprox/bridges.hpp"
#include "sapprox/evidence.hpp"
#include "sapprox/monotone.hpp"
#include "sapprox/regions.hpp"
#include "sapprox/space.hpp"

namespace sapprox {

using Json = nlohmann::ordered_json;

namespace detail {

inline void require_keys(const Json& obj, const std::vector<std::string>& keys,
                         const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected a JSON object");
  for (const auto& key : keys)
    if (!obj.contains(key)) throw ParseError(where + ": missing key \"" + key + "\"");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ParseError(where + ": unknown key \"" + key + "\"");
  }
}

inline std::vector<std::string> read_label_array(const Json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + ": expected an array of labels");
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_string()) throw ParseError(where + ": labels must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace detail

inline Json set_to_json(const ElementSet& set) {
  Json out = Json::array();
  for (const auto& label : set.labels()) out.push_back(label);
  return out;
}

inline Json rational_to_json(const Rational& r) { return Json(r.str()); }

inline Rational rational_from_json(const Json& value, const std::string& where) {
  if (!value.is_string())
    throw ParseError(where + ": rationals must be \"a/b\" strings");
  return Rational::parse(value.get<std::string>());
}

// Space document: {"U": [...], "W": [...], "T": {label: [...]},
//                  "S": {"kind": ...}}. Unknown keys are rejected everywhere.
inline Space space_from_json(const Json& doc) {
  detail::require_keys(doc, {"U", "W", "T", "S"}, "space");
  const auto u_labels = detail::read_label_array(doc.at("U"), "space.U");
  const auto w_labels = detail::read_label_array(doc.at("W"), "space.W");

  if (!doc.at("T").is_object()) throw ParseError("space.T: expected an object");
  std::map<std::string, std::vector<std::string>> t_map;
  for (const auto& [label, value] : doc.at("T").items())
    t_map.emplace(label, detail::read_label_array(value, "space.T[\"" + label + "\"]"));

  const Json& s = doc.at("S");
  if (!s.is_object() || !s.contains("kind") || !s.at("kind").is_string())
    throw ParseError("space.S: expected an object with a string \"kind\"");
  const DeciderKind kind = decider_kind_from_string(s.at("kind").get<std::string>());

  DeciderSpec spec;
  switch (kind) {
    case DeciderKind::subseteq:
      detail::require_keys(s, {"kind"}, "space.S");
      spec = DeciderSpec::subseteq();
      break;
    case DeciderKind::intersects:
      detail::require_keys(s, {"kind"}, "space.S");
      spec = DeciderSpec::intersects();
      break;
    case DeciderKind::card_threshold: {
      detail::require_keys(s, {"kind", "k"}, "space.S");
      const Json& k = s.at("k");
      if (!k.is_number_integer() || k.get<std::int64_t>() < 1)
        throw ParseError("space.S.k: expected a positive integer");
      spec = DeciderSpec::card_threshold(std::size_t(k.get<std::int64_t>()));
      break;
    }
    case DeciderKind::table: {
      detail::require_keys(s, {"kind", "entries"}, "space.S");
      if (!s.at("entries").is_array()) throw ParseError("space.S.entries: expected an array");
      std::vector<DeciderSpec::TableEntry> entries;
      for (const auto& entry : s.at("entries")) {
        detail::require_keys(entry, {"A", "minimal"}, "space.S.entries[]");
        DeciderSpec::TableEntry out;
        out.a = detail::read_label_array(entry.at("A"), "space.S.entries[].A");
        if (!entry.at("minimal").is_array())
          throw ParseError("space.S.entries[].minimal: expected an array of label arrays");
        for (const auto& minimal : entry.at("minimal"))
          out.minimal.push_back(detail::read_label_array(minimal, "space.S.entries[].minimal[]"));
        entries.push_back(std::move(out));
      }
      spec = DeciderSpec::table(std::move(entries));
      break;
    }
  }
  return build_space(u_labels, w_labels, t_map, spec);
}

inline Json decider_to_json(const Decider& s) {
  Json out;
  out["kind"] = to_string(s.kind());
  if (s.kind() == DeciderKind::card_threshold) out["k"] = s.k();
  if (s.kind() == DeciderKind::table) {
    Json entries = Json::array();
    for (const auto& [a, antichain] : s.entries()) {
      Json entry;
      entry["A"] = set_to_json(a);
      Json minimal = Json::array();
      for (const auto& m : antichain) minimal.push_back(set_to_json(m));
      entry["minimal"] = std::move(minimal);
      entries.push_back(std::move(entry));
    }
    out["entries"] = std::move(entries);
  }
  return out;
}

inline Json space_to_json(const Space& g) {
  Json out;
  out["U"] = g.u()->labels();
  out["W"] = g.w()->labels();
  Json t = Json::object();
  for (std::size_t i = 0; i < g.u()->size(); ++i) t[g.u()->label(i)] = set_to_json(g.image(i));
  out["T"] = std::move(t);
  out["S"] = decider_to_json(g.decider());
  return out;
}

// Belief document: {"W": [...], "m": [{"set": [...], "value": "a/b"}]}.
inline BeliefStructure belief_from_json(const Json& doc) {
  detail::require_keys(doc, {"W", "m"}, "belief");
  const auto w_labels = detail::read_label_array(doc.at("W"), "belief.W");
  if (!doc.at("m").is_array()) throw ParseError("belief.m: expected an array");
  std::vector<std::pair<std::vector<std::string>, Rational>> entries;
  for (const auto& entry : doc.at("m")) {
    detail::require_keys(entry, {"set", "value"}, "belief.m[]");
    entries.emplace_back(detail::read_label_array(entry.at("set"), "belief.m[].set"),
                         rational_from_json(entry.at("value"), "belief.m[].value"));
  }
  return BeliefStructure::build_from_labels(w_labels, entries);
}

inline Json belief_to_json(const BeliefStructure& bs) {
  Json out;
  out["W"] = bs.universe()->labels();
  Json m = Json::array();
  for (const auto& [set, mass] : bs.masses()) {
    Json entry;
    entry["set"] = set_to_json(set);
    entry["value"] = rational_to_json(mass);
    m.push_back(std::move(entry));
  }
  out["m"] = std::move(m);
  return out;
}

// Induced-mass document: the belief shape plus the verdict, so that computed
// candidates (including invalid ones) can be written and read back.
inline Json induced_to_json(const InducedMassResult& result) {
  Json out;
  out["W"] = result.universe->labels();
  Json m = Json::array();
  for (const auto& [set, mass] : result.masses) {
    Json entry;
    entry["set"] = set_to_json(set);
    entry["value"] = rational_to_json(mass);
    m.push_back(std::move(entry));
  }
  out["m"] = std::move(m);
  out["valid"] = result.valid;
  out["diagnostics"] = result.diagnostics;
  return out;
}

inline InducedMassResult induced_from_json(const Json& doc) {
  detail::require_keys(doc, {"W", "m", "valid", "diagnostics"}, "induced");
  InducedMassResult result;
  result.universe = Universe::make(detail::read_label_array(doc.at("W"), "induced.W"));
  if (!doc.at("m").is_array()) throw ParseError("induced.m: expected an array");
  for (const auto& entry : doc.at("m")) {
    detail::require_keys(entry, {"set", "value"}, "induced.m[]");
    ElementSet set = ElementSet::of_labels(
        result.universe, detail::read_label_array(entry.at("set"), "induced.m[].set"));
    if (!result.masses.emplace(std::move(set), rational_from_json(entry.at("value"), "induced.m[].value")).second)
      throw ParseError("induced.m[]: duplicate set");
  }
  if (!doc.at("valid").is_boolean()) throw ParseError("induced.valid: expected a boolean");
  result.valid = doc.at("valid").get<bool>();
  if (!doc.at("diagnostics").is_array()) throw ParseError("induced.diagnostics: expected an array");
  for (const auto& d : doc.at("diagnostics")) {
    if (!d.is_string()) throw ParseError("induced.diagnostics: expected strings");
    result.diagnostics.push_back(d.get<std::string>());
  }
  return result;
}

inline Json quality_to_json(const QualityPair& q) {
  Json out;
  out["q_lower"] = rational_to_json(q.q_lower);
  out["q_upper"] = rational_to_json(q.q_upper);
  return out;
}

inline Json reading_to_json(const EvidenceReading& r) {
  Json out;
  out["bel"] = rational_to_json(r.bel);
  out["pl"] = rational_to_json(r.pl);
  out["ignorance"] = rational_to_json(r.ignorance);
  return out;
}

inline Json monotone_report_to_json(const MonotoneReport& report, MonotoneScope scope) {
  Json out;
  out["scope"] = scope == MonotoneScope::space ? "space" : "decider";
  out["holds"] = report.holds;
  if (report.witness) {
    Json w;
    w["A"] = set_to_json(report.witness->a);
    w["X"] = set_to_json(report.witness->x);
    w["Y"] = set_to_json(report.witness->y);
    out["witness"] = std::move(w);
  }
  return out;
}

inline Json inflection_to_json(const Space& g, const std::vector<std::vector<ElementSet>>& ips) {
  Json out = Json::object();
  for (std::size_t i = 0; i < g.u()->size(); ++i) {
    Json antichain = Json::array();
    for (const auto& set : ips.at(i)) antichain.push_back(set_to_json(set));
    out[g.u()->label(i)] = std::move(antichain);
  }
  return out;
}

}  // namespace sapprox
