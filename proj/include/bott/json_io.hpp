#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bott/action_data.hpp"
#include "bott/errors.hpp"
#include "bott/localize.hpp"
#include "bott/obstruct.hpp"

// Canonical JSON serialization of all wire formats. Objects serialize
// with sorted keys and fixed-point data in canonical order, so identical
// datasets always produce byte-identical documents.

namespace bott {

struct ValidationError : std::runtime_error {
  std::vector<Violation> violations;
  explicit ValidationError(std::vector<Violation> v)
      : std::runtime_error(v.empty() ? "validation failed"
                                     : "validation failed: " + v.front().path +
                                           ": " + v.front().message),
        violations(std::move(v)) {}
};

namespace jsondetail {

inline long long get_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw ParseError(where + " must be an integer");
  if (j.is_number_unsigned() &&
      j.get<unsigned long long>() >
          static_cast<unsigned long long>(
              std::numeric_limits<long long>::max()))
    throw ParseError(where + " is out of the supported integer range");
  return j.get<long long>();
}

// Rationals serialize as a JSON integer when integral (and in range),
// as a "p/q" string otherwise.
inline nlohmann::json rational_to_json(const Rational& r) {
  if (is_integer(r)) {
    Int n = numerator(r);
    if (n >= std::numeric_limits<long long>::min() &&
        n <= std::numeric_limits<long long>::max())
      return n.convert_to<long long>();
  }
  return r.str();
}

inline Rational rational_from_json(const nlohmann::json& j,
                                   const std::string& where) {
  if (j.is_number_integer()) return Rational(get_int(j, where));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError(where + " must be an integer or a rational string");
}

inline nlohmann::json int_to_json(const Int& n) {
  if (n >= std::numeric_limits<long long>::min() &&
      n <= std::numeric_limits<long long>::max())
    return n.convert_to<long long>();
  return n.str();
}

}  // namespace jsondetail

inline nlohmann::json to_json(const CircleActionData& raw) {
  CircleActionData data = canonicalize(raw);
  nlohmann::json j;
  j["half_dimension"] = data.half_dimension;
  if (!data.label.empty()) j["label"] = data.label;
  j["isolated"] = nlohmann::json::array();
  for (const auto& pt : data.isolated)
    j["isolated"].push_back({{"exponents", pt.exponents}, {"sign", pt.sign}});
  if (!data.surfaces.empty()) {
    j["surfaces"] = nlohmann::json::array();
    for (const auto& s : data.surfaces) {
      nlohmann::json js = {{"genus", s.genus}, {"normal_euler", s.normal_euler}};
      if (!s.label.empty()) js["label"] = s.label;
      j["surfaces"].push_back(js);
    }
  }
  return j;
}

inline std::string serialize(const CircleActionData& data) {
  return to_json(data).dump(2) + "\n";
}

inline CircleActionData action_data_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  CircleActionData data;
  if (!j.contains("half_dimension"))
    throw ParseError("missing field 'half_dimension'");
  data.half_dimension = jsondetail::get_int(j["half_dimension"], "half_dimension");
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("label must be a string");
    data.label = j["label"].get<std::string>();
  }
  if (j.contains("isolated")) {
    if (!j["isolated"].is_array()) throw ParseError("isolated must be an array");
    for (const auto& jp : j["isolated"]) {
      IsolatedFixedPoint pt;
      if (!jp.is_object() || !jp.contains("exponents") || !jp.contains("sign"))
        throw ParseError("each isolated point needs 'exponents' and 'sign'");
      if (!jp["exponents"].is_array())
        throw ParseError("exponents must be an array");
      for (const auto& je : jp["exponents"])
        pt.exponents.push_back(jsondetail::get_int(je, "exponent"));
      long long sign = jsondetail::get_int(jp["sign"], "sign");
      if (sign != 1 && sign != -1) throw ParseError("sign must be 1 or -1");
      pt.sign = static_cast<int>(sign);
      data.isolated.push_back(std::move(pt));
    }
  }
  if (j.contains("surfaces")) {
    if (!j["surfaces"].is_array()) throw ParseError("surfaces must be an array");
    for (const auto& js : j["surfaces"]) {
      SurfaceComponent s;
      if (!js.is_object() || !js.contains("genus") ||
          !js.contains("normal_euler"))
        throw ParseError("each surface needs 'genus' and 'normal_euler'");
      s.genus = jsondetail::get_int(js["genus"], "genus");
      s.normal_euler = jsondetail::get_int(js["normal_euler"], "normal_euler");
      if (js.contains("label")) {
        if (!js["label"].is_string())
          throw ParseError("surface label must be a string");
        s.label = js["label"].get<std::string>();
      }
      data.surfaces.push_back(std::move(s));
    }
  }
  auto violations = validate(data);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return data;
}

inline CircleActionData parse_action_data(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return action_data_from_json(j);
}

inline nlohmann::json to_json(const ManifoldInvariants& inv) {
  nlohmann::json j;
  j["dimension"] = inv.dimension;
  if (!inv.label.empty()) j["label"] = inv.label;
  j["euler"] =
      inv.euler ? jsondetail::int_to_json(*inv.euler) : nlohmann::json();
  j["signature"] =
      inv.signature ? jsondetail::int_to_json(*inv.signature) : nlohmann::json();
  j["pontryagin"] = nlohmann::json::object();
  for (const auto& [I, value] : inv.pontryagin)
    j["pontryagin"][I.str()] =
        value ? jsondetail::rational_to_json(*value) : nlohmann::json();
  return j;
}

inline ManifoldInvariants invariants_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  ManifoldInvariants inv;
  if (!j.contains("dimension")) throw ParseError("missing field 'dimension'");
  inv.dimension = jsondetail::get_int(j["dimension"], "dimension");
  if (j.contains("label") && j["label"].is_string())
    inv.label = j["label"].get<std::string>();
  if (j.contains("euler") && !j["euler"].is_null())
    inv.euler = Int(jsondetail::get_int(j["euler"], "euler"));
  if (j.contains("signature") && !j["signature"].is_null())
    inv.signature = Int(jsondetail::get_int(j["signature"], "signature"));
  if (j.contains("pontryagin")) {
    if (!j["pontryagin"].is_object())
      throw ParseError("pontryagin must be an object");
    for (const auto& [key, value] : j["pontryagin"].items()) {
      Partition I = Partition::from_string(key);
      if (value.is_null())
        inv.pontryagin.emplace(I, std::nullopt);
      else
        inv.pontryagin.emplace(
            I, jsondetail::rational_from_json(value, "pontryagin[" + key + "]"));
    }
  }
  return inv;
}

inline ManifoldInvariants parse_invariants(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return invariants_from_json(j);
}

inline nlohmann::json to_json(const Theorem11Verdict& v) {
  nlohmann::json details;
  details["sign_sum"] = jsondetail::int_to_json(v.sign_sum);
  details["euler"] = jsondetail::int_to_json(v.euler);
  details["isolated_count"] = jsondetail::int_to_json(v.isolated_count);
  details["pontryagin"] = nlohmann::json::object();
  for (const auto& [I, p] : v.pontryagin)
    details["pontryagin"][I.str()] = jsondetail::rational_to_json(p);
  if (!v.reason.empty()) details["reason"] = v.reason;
  return {{"theorem", "1.1"},
          {"applicable", v.applicable},
          {"pass", v.pass},
          {"details", details}};
}

inline nlohmann::json to_json(const Theorem28Verdict& v) {
  nlohmann::json details;
  details["p1_third"] = jsondetail::rational_to_json(v.p1_third);
  details["sign_sum"] = jsondetail::int_to_json(v.sign_sum);
  details["normal_euler_sum"] = jsondetail::int_to_json(v.normal_sum);
  if (!v.reason.empty()) details["reason"] = v.reason;
  return {{"theorem", "2.8"},
          {"applicable", v.applicable},
          {"pass", v.pass},
          {"details", details}};
}

inline nlohmann::json to_json(const ObstructionVerdict& v) {
  nlohmann::json j;
  j["admissible"] = to_string(v.admissible);
  j["violations"] = nlohmann::json::array();
  for (const auto& viol : v.violations)
    j["violations"].push_back(
        {{"condition", viol.condition},
         {"anchor", viol.anchor},
         {"observed", jsondetail::rational_to_json(viol.observed)}});
  j["critical_points"] = v.critical_points
                             ? jsondetail::int_to_json(*v.critical_points)
                             : nlohmann::json();
  return j;
}

}  // namespace bott
