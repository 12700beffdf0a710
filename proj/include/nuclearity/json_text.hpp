#pragma once

#include <string>

#include <json.hpp>

namespace nuclearity::io {

using Json = nlohmann::ordered_json;

// %.17g, with non-finite values spelled "inf", "-inf", "nan".
std::string format_double(double v);

// Numbers that JSON cannot hold become strings.
Json number(double v);

// Indented dump with fixed key order and 17 significant digits for floats.
std::string dump_json(const Json& j);

}  // namespace nuclearity::io
