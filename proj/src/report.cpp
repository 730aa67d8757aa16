#include "orthant/report.hpp"

#include <cmath>

namespace orthant {

namespace {

using nlohmann::json;

json rational_array(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<Rational> parse_rational_array(const json& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(parse_rational(v.get<std::string>()));
  return out;
}

std::string parity_name(Parity parity) {
  return parity == Parity::alternating ? "alternating" : "always_plus";
}

json number_or_null(double value) { return std::isfinite(value) ? json(value) : json(nullptr); }

json witness_json(const StepSet& steps, const Witness& witness) {
  json out;
  out["first"] = to_string(steps[witness.first]);
  out["second"] = to_string(steps[witness.second]);
  out["axis"] = witness.axis ? json(*witness.axis + 1) : json(nullptr);
  out["reason"] = witness.reason;
  return out;
}

json approximate_json(const StepSet& steps, const ApproximateFactorization& approx) {
  json omega = json::object();
  for (std::size_t i = 0; i < steps.size() && i < approx.omega.size(); ++i) {
    omega[to_string(steps[i])] = approx.omega[i];
  }
  return {{"alpha", approx.alpha}, {"beta", approx.beta}, {"omega", omega}};
}

json step_weight_json(const StepSet& steps, std::span<const Rational> weights) {
  json out = json::object();
  for (std::size_t i = 0; i < steps.size(); ++i) out[to_string(steps[i])] = to_string(weights[i]);
  return out;
}

}  // namespace

json to_json(const AsymptoticFormula& formula) {
  json out;
  out["base"] = to_string(formula.base);
  out["beta"] = to_string(formula.beta);
  out["growth"] = to_string(formula.growth());
  out["exponent"] = to_string(formula.exponent);
  out["gamma_even"] = formula.gamma_even;
  out["gamma_odd"] = formula.gamma_odd;
  json points = json::array();
  json breakdown = json::array();
  for (const auto& c : formula.breakdown) {
    points.push_back({{"signs", c.signs},
                      {"s_argument", rational_array(c.s_argument)},
                      {"s_value", to_string(c.s_value)},
                      {"parity", parity_name(c.parity)}});
    json factors = json::array();
    for (std::size_t j = 0; j < c.factors.size(); ++j) {
      const auto& f = c.factors[j];
      factors.push_back({{"axis", j + 1},
                         {"alpha", to_string(f.alpha)},
                         {"sign", f.sign},
                         {"p", f.p_value ? json(to_string(*f.p_value)) : json(nullptr)},
                         {"value", f.value}});
    }
    breakdown.push_back({{"signs", c.signs}, {"factors", factors}, {"product", c.product}});
  }
  out["contributing_points"] = points;
  out["per_factor_breakdown"] = breakdown;
  return out;
}

AsymptoticFormula formula_from_json(const json& document) {
  AsymptoticFormula formula;
  formula.base = parse_rational(document.at("base").get<std::string>());
  formula.beta = parse_rational(document.at("beta").get<std::string>());
  formula.exponent = parse_rational(document.at("exponent").get<std::string>());
  formula.gamma_even = document.at("gamma_even").get<double>();
  formula.gamma_odd = document.at("gamma_odd").get<double>();
  const auto& points = document.at("contributing_points");
  const auto& breakdown = document.at("per_factor_breakdown");
  if (points.size() != breakdown.size()) {
    throw Error(ErrorKind::InvalidModel, "contributing points and breakdown differ in length");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    PointContribution c;
    c.signs = points[i].at("signs").get<std::vector<int>>();
    c.s_argument = parse_rational_array(points[i].at("s_argument"));
    c.s_value = parse_rational(points[i].at("s_value").get<std::string>());
    c.parity = points[i].at("parity").get<std::string>() == "alternating" ? Parity::alternating
                                                                        : Parity::always_plus;
    c.product = breakdown[i].at("product").get<double>();
    for (const auto& f : breakdown[i].at("factors")) {
      AxisFactor factor;
      factor.alpha = parse_rational(f.at("alpha").get<std::string>());
      factor.sign = f.at("sign").get<int>();
      if (!f.at("p").is_null()) factor.p_value = parse_rational(f.at("p").get<std::string>());
      factor.value = f.at("value").get<double>();
      c.factors.push_back(std::move(factor));
    }
    formula.breakdown.push_back(std::move(c));
  }
  return formula;
}

json analysis_report(const ModelSpec& model, const Analysis& analysis) {
  json out = to_json(analysis.formula);
  const auto& w = analysis.weighting;
  out["dimension"] = model.steps.dimension();
  out["classification"] = w.kind == WeightingKind::central ? "central" : "factored";
  out["symmetric"] = analysis.symmetric;
  out["alpha"] = rational_array(w.alpha);
  out["omega"] = w.omega.empty() ? json(nullptr) : step_weight_json(model.steps, w.omega);
  out["alpha_plus"] = rational_array(analysis.profile.alpha_plus);
  out["alpha_minus"] = rational_array(analysis.profile.alpha_minus);
  out["r"] = analysis.profile.r;
  out["m"] = analysis.profile.m;
  out["t_minimal"] = to_string(analysis.profile.t_minimal);
  out["weighted_drift"] = rational_array(analysis.drift);
  return out;
}

json classification_report(const ModelSpec& model) {
  const auto& steps = model.steps;
  json out;
  out["step_weights"] = step_weight_json(steps, model.weights);
  auto symmetric = classify_symmetric(steps, model.weights);
  out["symmetric"] = std::holds_alternative<SymmetricWeighting>(symmetric);
  if (auto* failure = std::get_if<NotSymmetric>(&symmetric)) {
    out["symmetry_witness"] = {{"step", to_string(steps[failure->step])},
                               {"reflection", to_string(steps[steps.reflected_index(failure->step, failure->axis)])},
                               {"axis", failure->axis + 1}};
  }

  auto central = classify_central(steps, model.weights);
  if (auto* c = std::get_if<CentralWeighting>(&central)) {
    out["classification"] = "central";
    out["alpha"] = rational_array(c->alpha);
    out["beta"] = to_string(c->beta);
    return out;
  }
  const auto& not_central = std::get<NotCentral>(central);
  out["central_witness"] = witness_json(steps, not_central.witness);
  if (not_central.approximate) out["central_approximate"] = approximate_json(steps, *not_central.approximate);

  if (out["symmetric"].get<bool>()) {
    out["classification"] = "symmetric";
    out["omega"] = step_weight_json(steps, model.weights);
    return out;
  }
  auto factored = factor_weighting(steps, model.weights);
  if (auto* f = std::get_if<FactoredWeighting>(&factored)) {
    out["classification"] = "factored";
    out["alpha"] = rational_array(f->alpha);
    out["omega"] = step_weight_json(steps, f->omega.omega);
    return out;
  }
  const auto& failure = std::get<NotFactorable>(factored);
  out["classification"] = "none";
  out["factor_witness"] = witness_json(steps, failure.witness);
  out["exact"] = !failure.approximate.has_value();
  if (failure.approximate) out["factored_approximate"] = approximate_json(steps, *failure.approximate);
  return out;
}

json to_json(const ParityEstimate& estimate) {
  json out;
  out["present"] = estimate.present;
  if (!estimate.present) return out;
  out["value"] = number_or_null(estimate.value);
  out["order"] = estimate.order;
  out["order1"] = number_or_null(estimate.order1);
  out["order2"] = number_or_null(estimate.order2);
  out["residual"] = number_or_null(estimate.residual);
  out["previous_residual"] = number_or_null(estimate.previous_residual);
  out["converged"] = estimate.converged;
  out["sample_n"] = estimate.sample_ns;
  json tail = json::array();
  const std::size_t start = estimate.ns.size() > 5 ? estimate.ns.size() - 5 : 0;
  for (std::size_t i = start; i < estimate.ns.size(); ++i) {
    tail.push_back({{"n", estimate.ns[i]}, {"ratio", number_or_null(estimate.ratios[i])}});
  }
  out["last_ratios"] = tail;
  return out;
}

json to_json(const ConvergenceReport& report) {
  return {{"n_max", report.ns.empty() ? 0 : report.ns.back()},
          {"even", to_json(report.even)},
          {"odd", to_json(report.odd)},
          {"non_convergence", report.non_convergence()}};
}

json to_json(const ExponentEstimate& estimate) {
  return {{"value", number_or_null(estimate.value)},
          {"residual", number_or_null(estimate.residual)},
          {"converged", estimate.converged},
          {"window", estimate.window.empty() ? json::array()
                                             : json::array({estimate.window.front(), estimate.window.back()})}};
}

json error_report(const Error& error) {
  json violations = json::array();
  for (const auto& v : error.violations()) {
    json entry;
    entry["kind"] = std::string(error_name(v.kind));
    entry["message"] = v.message;
    if (!v.step.empty()) entry["step"] = v.step;
    if (v.axis) entry["axis"] = *v.axis + 1;
    violations.push_back(entry);
  }
  json out;
  out["error"] = std::string(error_name(error.kind()));
  out["message"] = error.what();
  out["violations"] = violations;
  if (const auto* budget = dynamic_cast<const BudgetExceeded*>(&error)) {
    out["required_bytes"] = budget->required_bytes();
    out["budget_bytes"] = budget->budget_bytes();
  }
  return out;
}

}  // namespace orthant
