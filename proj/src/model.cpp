#include "orthant/model.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace orthant {

namespace {

Rational rational_field(const nlohmann::json& value, const std::string& where) {
  try {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorKind::InvalidModel, where + ": " + e.what());
  }
  throw Error(ErrorKind::InvalidModel, where + " must be a rational string \"p/q\" or an integer");
}

std::vector<Rational> rational_list(const nlohmann::json& value, const std::string& where) {
  if (!value.is_array()) throw Error(ErrorKind::InvalidModel, where + " must be an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(rational_field(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::exact;
  if (text == "float") return Mode::floating;
  throw Error(ErrorKind::InvalidModel, "mode must be 'exact' or 'float', got '" + std::string(text) + "'");
}

ModelSpec parse_model(const nlohmann::json& document) {
  if (!document.is_object()) throw Error(ErrorKind::InvalidModel, "model must be a JSON object");
  if (!document.contains("dimension") || !document["dimension"].is_number_integer()) {
    throw Error(ErrorKind::InvalidModel, "model needs an integer 'dimension'");
  }
  if (!document.contains("steps") || !document["steps"].is_array()) {
    throw Error(ErrorKind::InvalidModel, "model needs a 'steps' array");
  }
  const long dimension = document["dimension"].get<long>();
  if (dimension < 1) throw Error(ErrorKind::DimensionMismatch, "dimension must be at least 1");

  std::vector<std::vector<int>> raw;
  for (const auto& step : document["steps"]) {
    if (!step.is_array()) throw Error(ErrorKind::InvalidModel, "each step must be an array of integers");
    std::vector<int> components;
    for (const auto& c : step) {
      if (!c.is_number_integer()) throw Error(ErrorKind::InvalidModel, "step components must be integers");
      components.push_back(c.get<int>());
    }
    raw.push_back(std::move(components));
  }
  ModelSpec model{StepSet::validate(static_cast<std::size_t>(dimension), raw), {}, std::nullopt, {}};

  const nlohmann::json* block = &document;
  if (document.contains("weights")) {
    if (!document["weights"].is_object()) throw Error(ErrorKind::InvalidModel, "'weights' must be an object");
    block = &document["weights"];
  }
  const bool has_alpha = block->contains("alpha");
  const bool has_steps = block->contains("step_weights");
  if (has_alpha && has_steps) {
    throw Error(ErrorKind::InvalidModel, "give either alpha/beta or step_weights, not both");
  }
  if (has_alpha) {
    CentralWeighting central;
    central.alpha = rational_list((*block)["alpha"], "alpha");
    central.beta = block->contains("beta") ? rational_field((*block)["beta"], "beta") : Rational(1);
    model.weights = central_weights(model.steps, central.alpha, central.beta);
    model.declared_central = std::move(central);
  } else if (has_steps) {
    const auto& table = (*block)["step_weights"];
    if (!table.is_object()) throw Error(ErrorKind::InvalidModel, "'step_weights' must be an object");
    std::map<Step, Rational> weights;
    for (const auto& [key, value] : table.items()) {
      Step step;
      try {
        step = parse_step(key);
      } catch (const std::invalid_argument& e) {
        throw Error(ErrorKind::InvalidModel, e.what());
      }
      weights[step] = rational_field(value, "step_weights[" + key + "]");
    }
    model.weights = weights_from_map(model.steps, weights);
  } else {
    model.weights.assign(model.steps.size(), Rational(1));
  }

  if (document.contains("options")) {
    const auto& options = document["options"];
    if (options.contains("n_max")) model.options.n_max = options["n_max"].get<int>();
    if (options.contains("mode")) model.options.mode = parse_mode(options["mode"].get<std::string>());
    if (options.contains("budget")) model.options.budget = options["budget"].get<std::uint64_t>();
  }
  return model;
}

ModelSpec parse_model_text(std::string_view text) {
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidModel, std::string("model is not valid JSON: ") + e.what());
  }
  return parse_model(document);
}

ResolvedWeighting resolve_weighting(const ModelSpec& model) {
  if (model.declared_central) {
    return {WeightingKind::central, model.declared_central->alpha, {}, model.declared_central->beta};
  }
  auto central = classify_central(model.steps, model.weights);
  if (auto* c = std::get_if<CentralWeighting>(&central)) {
    return {WeightingKind::central, c->alpha, {}, c->beta};
  }
  auto factored = factor_weighting(model.steps, model.weights);
  if (auto* f = std::get_if<FactoredWeighting>(&factored)) {
    return {WeightingKind::factored, f->alpha, f->omega.omega, Rational(1)};
  }
  const auto& failure = std::get<NotFactorable>(factored);
  Violation violation{ErrorKind::NotFactorable, failure.witness.reason,
                      model.steps[failure.witness.first].components, failure.witness.axis};
  if (failure.approximate) violation.message += " (factorable only in floating point)";
  throw Error({violation});
}

Analysis analyze(const ModelSpec& model, PEvaluation p_evaluation) {
  Analysis analysis;
  analysis.weighting = resolve_weighting(model);
  const auto& w = analysis.weighting;
  analysis.profile = weight_profile(model.steps, w.alpha, w.omega);
  analysis.formula = asymptotic_formula(model.steps, w.alpha, w.omega, w.beta, p_evaluation);
  analysis.drift = weighted_drift(model.steps, w.alpha, w.omega);
  analysis.symmetric = std::holds_alternative<SymmetricWeighting>(classify_symmetric(model.steps, model.weights));
  return analysis;
}

}  // namespace orthant
