#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "orthant/asymptotics.hpp"
#include "orthant/stepset.hpp"
#include "orthant/weighting.hpp"

namespace orthant {

enum class Mode { exact, floating };

Mode parse_mode(std::string_view text);

struct ModelOptions {
  std::optional<int> n_max;
  std::optional<Mode> mode;
  std::optional<std::uint64_t> budget;
};

/// A parsed model file:
///   {"dimension": d, "steps": [[...], ...],
///    "weights": {"alpha": ["2","1","1/4"], "beta": "4"}
///             | {"step_weights": {"(1,0,0)": "8", ...}},
///    "options": {"n_max": 80, "mode": "float", "budget": 1073741824}}
/// The weight keys may also sit at the top level. No weight block means all
/// weights are 1.
struct ModelSpec {
  StepSet steps;
  StepWeights weights;  ///< full per-step weights including β
  std::optional<CentralWeighting> declared_central;
  ModelOptions options;
};

ModelSpec parse_model(const nlohmann::json& document);
ModelSpec parse_model_text(std::string_view text);

enum class WeightingKind { central, factored };

/// The exact weighting the asymptotic engine runs on.
struct ResolvedWeighting {
  WeightingKind kind = WeightingKind::central;
  std::vector<Rational> alpha;
  StepWeights omega;  ///< empty for central weightings
  Rational beta{1};
};

/// Central when possible, otherwise ω-symmetric times central. Throws
/// Error(NotFactorable) otherwise.
ResolvedWeighting resolve_weighting(const ModelSpec& model);

struct Analysis {
  ResolvedWeighting weighting;
  WeightProfile profile;
  AsymptoticFormula formula;
  std::vector<Rational> drift;  ///< Σ σ ω_σ α^σ (β excluded)
  bool symmetric = false;
};

Analysis analyze(const ModelSpec& model, PEvaluation p_evaluation = PEvaluation::at_point);

}  // namespace orthant
