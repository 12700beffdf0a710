#pragma once

#include "nuclearity/characters.hpp"
#include "nuclearity/free_field.hpp"
#include "nuclearity/json_text.hpp"
#include "nuclearity/lowest_weight_rep.hpp"
#include "nuclearity/verification_report.hpp"

namespace nuclearity::io {

Json to_json(const VerificationReport& report);
Json to_json(const characters::NuclearityChainReport& report);
Json to_json(const characters::LogEllipticityFit& fit);
Json to_json(const freefield::DoubleConeResult& result);
Json to_json(const lwrep::NuclearNormResult& result);

}  // namespace nuclearity::io
