#pragma once

#include <json.hpp>

#include "jordan/decompose.hpp"
#include "jordan/lie.hpp"
#include "jordan/report.hpp"

namespace jordan {

using Json = nlohmann::ordered_json;

Json matrix_to_json(const SquareMatrix& m);
// Input matrices must be exact rationals (decimal strings convert exactly).
SquareMatrix matrix_from_json(const nlohmann::json& j);

Json poly_to_json(const Poly& p);
Json spectral_to_json(const SpectralData& s);
// Projector polynomials with their identity-check results at T.
Json projectors_to_json(const ProjectorSet& ps, const VerificationReport& identities);
Json verification_to_json(const VerificationReport& r);
Json classification_to_json(const ClassificationReport& c);
Json additive_to_json(const AdditiveDecomposition& d);
Json multiplicative_to_json(const MultiplicativeDecomposition& d);

LieStructure lie_from_json(const nlohmann::json& j);
Json lie_to_json(const LieStructure& L);

}  // namespace jordan
