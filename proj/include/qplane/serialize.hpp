#pragma once

// JSON/CSV views of the core types.  Coefficients travel as canonical
// expression text, so every dump parses back to an equal value.

#include "qplane/omega.hpp"
#include "qplane/plane.hpp"
#include "qplane/representations.hpp"
#include "qplane/verifiers.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qplane {

using Json = nlohmann::json;

Json element_to_json(const PlaneElement& a);
PlaneElement element_from_json(const Json& j);

Json omega_to_json(const OmegaUElement& a);
OmegaUElement omega_from_json(const Json& j);

Json pairs_to_json(const PairSequence& p);
PairSequence pairs_from_json(const Json& j);

Json beta_gamma_to_json(const BetaGammaForm& f);
BetaGammaForm beta_gamma_from_json(const Json& j);

Json matrix_to_json(const QMatrix& m);
Json matrix_to_json(const CMatrix& m);

Json check_to_json(const CheckResult& r);

std::string growth_csv(const std::vector<GrowthPoint>& points);

}  // namespace qplane
