#include "nuclearity/spectrum_io.hpp"

#include <fstream>

#include "nuclearity/error.hpp"
#include "nuclearity/free_field.hpp"

namespace nuclearity::io {

namespace {

double require_number(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw Error(ErrorKind::InvalidInput, std::string("spectrum field '") + key + "' must be a number");
  }
  return j.at(key).get<double>();
}

std::vector<characters::WeightMultiplicity> parse_entries(const Json& list) {
  if (!list.is_array()) throw Error(ErrorKind::InvalidInput, "spectrum entries must be a list");
  std::vector<characters::WeightMultiplicity> out;
  for (const Json& e : list) {
    if (!e.is_object()) throw Error(ErrorKind::InvalidInput, "spectrum entry must be an object");
    out.push_back({require_number(e, "weight"), require_number(e, "multiplicity")});
  }
  return out;
}

}  // namespace

characters::MultiplicitySpectrum parse_spectrum(const Json& j) {
  if (j.is_array()) return characters::MultiplicitySpectrum(parse_entries(j));
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "spectrum must be a list or an object");
  std::vector<characters::WeightMultiplicity> entries;
  if (j.contains("entries")) entries = parse_entries(j.at("entries"));
  if (!j.contains("tail_rule")) return characters::MultiplicitySpectrum(std::move(entries));

  const Json& rule = j.at("tail_rule");
  if (!rule.is_object() || !rule.contains("name") || !rule.at("name").is_string()) {
    throw Error(ErrorKind::InvalidInput, "tail_rule must be an object with a name");
  }
  const std::string name = rule.at("name").get<std::string>();
  characters::MultiplicitySpectrum base;
  if (name == "free_field") {
    const double d = require_number(rule, "d");
    if (d != static_cast<int>(d)) throw Error(ErrorKind::BadDimension, "d must be an integer");
    base = freefield::free_field_spectrum(static_cast<int>(d));
  } else if (name == "constant") {
    base = characters::MultiplicitySpectrum::constant_tail(require_number(rule, "first_weight"),
                                                           require_number(rule, "multiplicity"));
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown tail rule '" + name + "'");
  }
  for (const auto& e : base.entries()) entries.push_back(e);
  characters::MultiplicitySpectrum spec(std::move(entries), base.tail());
  spec.flags = base.flags;
  return spec;
}

characters::MultiplicitySpectrum load_spectrum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open spectrum file " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed spectrum file: ") + e.what());
  }
  return parse_spectrum(j);
}

Json spectrum_to_json(const characters::MultiplicitySpectrum& spec) {
  Json j;
  Json entries = Json::array();
  for (const auto& e : spec.entries()) {
    entries.push_back(Json{{"weight", number(e.weight)}, {"multiplicity", number(e.multiplicity)}});
  }
  j["entries"] = entries;
  if (const auto& tail = spec.tail()) {
    Json rule;
    rule["name"] = tail->name;
    for (const auto& [key, value] : tail->parameters) rule[key] = number(value);
    j["tail_rule"] = rule;
  }
  if (!spec.flags.empty()) j["flags"] = spec.flags;
  return j;
}

}  // namespace nuclearity::io
