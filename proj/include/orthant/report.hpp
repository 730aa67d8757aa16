#pragma once

#include <json.hpp>

#include "orthant/asymptotics.hpp"
#include "orthant/convergence.hpp"
#include "orthant/error.hpp"
#include "orthant/model.hpp"

namespace orthant {

// Rationals travel as "p/q" strings, floats as JSON numbers (shortest
// round-trip form, at most 17 significant digits).

nlohmann::json to_json(const AsymptoticFormula& formula);
/// Inverse of to_json(AsymptoticFormula).
AsymptoticFormula formula_from_json(const nlohmann::json& document);

/// analyze report: formula fields plus weighting, profile and drift.
nlohmann::json analysis_report(const ModelSpec& model, const Analysis& analysis);

/// classify report: central | symmetric | factored | none, with witnesses.
nlohmann::json classification_report(const ModelSpec& model);

nlohmann::json to_json(const ParityEstimate& estimate);
nlohmann::json to_json(const ConvergenceReport& report);
nlohmann::json to_json(const ExponentEstimate& estimate);

nlohmann::json error_report(const Error& error);

}  // namespace orthant
