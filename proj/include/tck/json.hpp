#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "tck/curves.hpp"
#include "tck/hilbert.hpp"
#include "tck/mora.hpp"
#include "tck/resolution.hpp"

namespace tck {

using Json = nlohmann::ordered_json;

/// FreeComplex schema:
///   {"levels": [[0], [2, 2, ...], ...],
///    "maps":   [[["x1^2-x0*x2", ...]], ...]}   // maps[j-1] = rows of map j
/// Entries are polynomials in the text format of poly_io.hpp.
Json complex_to_json(const FreeComplex& c);

/// Inverse of complex_to_json. Throws Error(Parse) on malformed documents and
/// Error(ShapeMismatch) when matrix shapes disagree with the levels.
FreeComplex complex_from_json(const Json& j);

Json to_json(const CurveSpec& spec);
Json to_json(const GeneratorSet& g);
Json to_json(const StandardBasisReport& report, const std::vector<std::string>& labels);
Json to_json(const CMCertificate& cert);
Json to_json(const ExactnessReport& report);
Json to_json(const BettiTable& table);

}  // namespace tck
