#pragma once

#include <string>

#include "nuclearity/characters.hpp"
#include "nuclearity/json_text.hpp"

namespace nuclearity::io {

// Either a list of {"weight", "multiplicity"} or an object
// {"entries": [...], "tail_rule": {"name": "free_field", "d": 3}}.
// Tail rules: free_field {d}, constant {first_weight, multiplicity}.
characters::MultiplicitySpectrum parse_spectrum(const Json& j);
characters::MultiplicitySpectrum load_spectrum(const std::string& path);

Json spectrum_to_json(const characters::MultiplicitySpectrum& spec);

}  // namespace nuclearity::io
