#pragma once

#include <json.hpp>

#include "omalous/search.hpp"

namespace omalous {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Integers as JSON numbers, everything else as a "p/q" string.
Json rational_to_json(const Rational& q);

Json variety_to_json(const VarietySpec& variety);
/// {"family": "hypersurface", "d": 5} | {"family": "cicy", "n": 5, "degrees": [3, 3]} |
/// {"family": "blowup", "n": 3} | {"family": "product", "n": 2, "m": 3}.
VarietySpec variety_from_json(const Json& j);

Json term_to_json(const TermSpec& term);
TermSpec term_from_json(const VarietySpec& variety, const Json& j);

/// {"schema": "1", "variety": {...}, "m0": [{"divisor": "-H + E1", "mult": 3}, ...],
///  "m1": [...], "m2": [...], "provenance": "..."}
Json monad_to_json(const MonadSpec& monad);
/// Throws std::invalid_argument (or nlohmann::json::exception) on schema errors.
MonadSpec monad_from_json(const Json& j);

Json chern_to_json(const BundleChernData& data);
Json report_to_json(const OmalityReport& report);
Json tag_to_json(const StabilityTag& tag);
Json dimensions_to_json(const MonadDimensions& dims);

Json to_json(const HypersurfaceSolution& s);
Json to_json(const ProductSolution& s);

}  // namespace omalous
