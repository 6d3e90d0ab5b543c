#pragma once

#include <fstream>
#include <istream>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include <quadrica/bounds.hpp>
#include <quadrica/diophantine.hpp>
#include <quadrica/line_restriction.hpp>

namespace quadrica {

inline constexpr const char* kSchemaTag = "quadrica/1";

/// Integers that fit a 64-bit signed value are emitted as JSON numbers,
/// anything larger as a decimal string; parsers must accept both.
inline nlohmann::json json_integer(const Integer& v) {
  if (v.fits_slong_p()) return nlohmann::json(static_cast<long long>(v.get_si()));
  return nlohmann::json(v.get_str());
}

inline nlohmann::json json_optional_flag(const std::optional<bool>& b) {
  if (!b) return nlohmann::json("not evaluated");
  return nlohmann::json(*b);
}

inline nlohmann::json to_json(const BoundReport& rep) {
  nlohmann::json j;
  j["schema"] = kSchemaTag;
  j["c"] = json_integer(rep.c);
  j["main_lhs"] = json_integer(rep.main_lhs);
  j["main_rhs"] = json_integer(rep.main_rhs);
  j["main_bound_ok"] = rep.main_bound_ok;
  j["equality"] = rep.equality;
  j["alpha_lower_ok"] = json_optional_flag(rep.alpha_lower_ok);
  j["equality_iff_alpha"] = json_optional_flag(rep.equality_iff_alpha);
  if (rep.np_lhs) {
    j["np_lhs"] = json_integer(*rep.np_lhs);
    j["np_rhs"] = json_integer(*rep.np_rhs);
    j["np_bound_ok"] = json_optional_flag(rep.np_bound_ok);
    j["np_equality"] = json_optional_flag(rep.np_equality);
    j["h0_lower_ok"] = json_optional_flag(rep.h0_lower_ok);
    j["h0_equality_iff_ok"] = json_optional_flag(rep.h0_equality_iff_ok);
  }
  if (rep.classification_hit) {
    j["classification_hit"] = nlohmann::json::array(
        {json_integer((*rep.classification_hit)[0]), json_integer((*rep.classification_hit)[1]),
         json_integer((*rep.classification_hit)[2])});
  }
  if (rep.regime) j["regime"] = to_string(*rep.regime);
  j["messages"] = rep.messages;
  return j;
}

inline nlohmann::json to_json(const RegimeReport& rep) {
  nlohmann::json j;
  j["schema"] = kSchemaTag;
  j["regime"] = to_string(rep.regime);
  j["minimal_degree"] = rep.minimal_degree;
  j["trivial_bound"] = json_integer(rep.trivial_bound);
  j["egh_bound"] = json_integer(rep.egh_bound);
  j["our_d_max"] = json_integer(rep.our_d_max);
  if (rep.zak_bound) j["zak_bound"] = json_integer(*rep.zak_bound);
  j["messages"] = rep.messages;
  return j;
}

inline nlohmann::json to_json(const LineSampleReport& rep) {
  nlohmann::json j;
  j["schema"] = kSchemaTag;
  j["trials"] = rep.trials;
  j["height"] = rep.height;
  j["seed"] = rep.seed;
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [c, n] : rep.counts) counts[to_string(c)] = n;
  j["counts"] = counts;
  j["double_cover_found"] = rep.double_cover_found;
  return j;
}

inline nlohmann::json to_json(const Solution& s) {
  nlohmann::json j;
  j["schema"] = kSchemaTag;
  j["d"] = json_integer(s.d);
  j["c"] = json_integer(s.c);
  j["value"] = json_integer(s.value);
  return j;
}

/// Quadric systems on file: {"r": <ambient>, "forms": [form, ...]} where
/// each form lists upper-triangle entries [i, j, "rational"] of its
/// symmetric matrix.
inline std::vector<QuadraticForm> forms_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("forms"))
    throw std::invalid_argument("forms: expected an object with keys 'r' and 'forms'");
  const int r = j.at("r").get<int>();
  if (r < 1) throw std::invalid_argument("forms: ambient dimension must be >= 1");
  std::vector<QuadraticForm> out;
  for (const nlohmann::json& jform : j.at("forms")) {
    QuadraticForm f = QuadraticForm::zero(r);
    for (const nlohmann::json& entry : jform) {
      if (!entry.is_array() || entry.size() != 3)
        throw std::invalid_argument("forms: each entry must be [i, j, coefficient]");
      const int i = entry.at(0).get<int>();
      const int k = entry.at(1).get<int>();
      if (i < 0 || k < 0 || i > k || k > r)
        throw std::invalid_argument("forms: entry indices must satisfy 0 <= i <= j <= r");
      const nlohmann::json& c = entry.at(2);
      Rational coeff = c.is_string() ? parse_rational(c.get<std::string>())
                                     : Rational(c.get<long>());
      f.set_entry(i, k, coeff);
    }
    out.push_back(std::move(f));
  }
  if (out.empty()) throw std::invalid_argument("forms: empty system");
  return out;
}

inline std::vector<QuadraticForm> load_forms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open forms file: " + path);
  nlohmann::json j;
  in >> j;
  return forms_from_json(j);
}

}  // namespace quadrica
