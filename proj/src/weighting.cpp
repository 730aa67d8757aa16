#include "orthant/weighting.hpp"

#include <cmath>

namespace orthant {

namespace {

void require_positive(std::span<const Rational> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) {
      throw Error({{ErrorKind::NonPositiveWeight,
                    std::string(what) + " component " + std::to_string(i + 1) + " is " +
                        to_string(values[i]) + ", must be positive",
                    {},
                    i}});
    }
  }
}

void require_aligned(const StepSet& steps, const StepWeights& weights) {
  if (weights.size() != steps.size()) {
    throw Error(ErrorKind::WeightDomainMismatch, "weights do not cover the step set");
  }
  require_positive(weights, "weight");
}

// Squared per-axis weight ratios w_σ / w_{reflect_i σ} over σ_i = +1. These
// are α_i² whenever a factorization w = ω α^σ exists.
std::variant<std::vector<Rational>, Witness> squared_ratios(const StepSet& steps,
                                                            const StepWeights& weights) {
  std::vector<Rational> ratios(steps.dimension());
  for (std::size_t axis = 0; axis < steps.dimension(); ++axis) {
    std::optional<std::size_t> reference;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (steps[i][axis] != 1) continue;
      Rational ratio = weights[i] / weights[steps.reflected_index(i, axis)];
      if (!reference) {
        reference = i;
        ratios[axis] = ratio;
      } else if (ratio != ratios[axis]) {
        return Witness{*reference, i, axis,
                       "reflection ratios on axis " + std::to_string(axis + 1) + " differ: " +
                           to_string(ratios[axis]) + " vs " + to_string(ratio)};
      }
    }
  }
  return ratios;
}

Rational monomial_of_squares(const Step& step, std::span<const Rational> squares) {
  return monomial(step, squares);
}

std::size_t first_step_moving(const StepSet& steps, std::size_t axis) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i][axis] == 1) return i;
  }
  return 0;
}

}  // namespace

StepWeights weights_from_map(const StepSet& steps, const std::map<Step, Rational>& weights) {
  std::vector<Violation> violations;
  StepWeights out(steps.size());
  std::vector<bool> seen(steps.size(), false);
  for (const auto& [step, weight] : weights) {
    auto index = steps.index_of(step);
    if (!index) {
      violations.push_back({ErrorKind::WeightDomainMismatch,
                            "weight given for " + to_string(step) + ", which is not a step",
                            step.components, std::nullopt});
      continue;
    }
    if (weight <= 0) {
      violations.push_back({ErrorKind::NonPositiveWeight,
                            "weight of " + to_string(step) + " is " + to_string(weight),
                            step.components, std::nullopt});
    }
    out[*index] = weight;
    seen[*index] = true;
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!seen[i]) {
      violations.push_back({ErrorKind::WeightDomainMismatch, "no weight for " + to_string(steps[i]),
                            steps[i].components, std::nullopt});
    }
  }
  if (!violations.empty()) throw Error(std::move(violations));
  return out;
}

StepWeights central_weights(const StepSet& steps, std::span<const Rational> alpha,
                            const Rational& beta) {
  if (alpha.size() != steps.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "alpha has wrong dimension");
  }
  require_positive(alpha, "alpha");
  if (beta <= 0) throw Error(ErrorKind::NonPositiveWeight, "beta must be positive");
  StepWeights out;
  out.reserve(steps.size());
  for (const auto& step : steps.steps()) out.push_back(beta * monomial(step, alpha));
  return out;
}

StepWeights combine_weights(const StepSet& steps, std::span<const Rational> omega,
                            std::span<const Rational> alpha) {
  if (alpha.size() != steps.dimension() || omega.size() != steps.size()) {
    throw Error(ErrorKind::DimensionMismatch, "omega/alpha sizes do not match the step set");
  }
  StepWeights out;
  out.reserve(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) out.push_back(omega[i] * monomial(steps[i], alpha));
  return out;
}

std::variant<CentralWeighting, NotCentral> classify_central(const StepSet& steps,
                                                            const StepWeights& weights) {
  require_aligned(steps, weights);
  auto ratios = squared_ratios(steps, weights);
  if (auto* witness = std::get_if<Witness>(&ratios)) return NotCentral{*witness, std::nullopt};
  const auto& alpha_sq = std::get<std::vector<Rational>>(ratios);

  // β² = w_σ² / ∏ (α_i²)^{σ_i} must be the same for every step.
  Rational beta_sq;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Rational candidate = weights[i] * weights[i] / monomial_of_squares(steps[i], alpha_sq);
    if (i == 0) {
      beta_sq = candidate;
    } else if (candidate != beta_sq) {
      return NotCentral{Witness{0, i, std::nullopt,
                                "steps " + to_string(steps[0]) + " and " + to_string(steps[i]) +
                                    " imply different scales beta"},
                        std::nullopt};
    }
  }

  CentralWeighting central;
  std::optional<Witness> irrational;
  for (std::size_t axis = 0; axis < alpha_sq.size(); ++axis) {
    auto root = exact_sqrt(alpha_sq[axis]);
    if (!root) {
      std::size_t i = first_step_moving(steps, axis);
      irrational = Witness{i, steps.reflected_index(i, axis), axis,
                           "alpha_" + std::to_string(axis + 1) + "^2 = " + to_string(alpha_sq[axis]) +
                               " is not a rational square"};
      break;
    }
    central.alpha.push_back(*root);
  }
  auto beta_root = exact_sqrt(beta_sq);
  if (!irrational && !beta_root) {
    irrational = Witness{0, 0, std::nullopt, "beta^2 = " + to_string(beta_sq) + " is not a rational square"};
  }
  if (irrational) {
    ApproximateFactorization approx;
    for (const auto& a : alpha_sq) approx.alpha.push_back(std::sqrt(a.get_d()));
    approx.beta = std::sqrt(beta_sq.get_d());
    approx.omega.assign(steps.size(), approx.beta);
    return NotCentral{*irrational, approx};
  }
  central.beta = *beta_root;
  return central;
}

std::variant<SymmetricWeighting, NotSymmetric> classify_symmetric(const StepSet& steps,
                                                                  const StepWeights& weights) {
  require_aligned(steps, weights);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    for (std::size_t axis = 0; axis < steps.dimension(); ++axis) {
      if (weights[i] != weights[steps.reflected_index(i, axis)]) return NotSymmetric{i, axis};
    }
  }
  return SymmetricWeighting{weights};
}

std::variant<FactoredWeighting, NotFactorable> factor_weighting(const StepSet& steps,
                                                                const StepWeights& weights) {
  require_aligned(steps, weights);
  auto ratios = squared_ratios(steps, weights);
  if (auto* witness = std::get_if<Witness>(&ratios)) return NotFactorable{*witness, std::nullopt};
  const auto& alpha_sq = std::get<std::vector<Rational>>(ratios);

  std::vector<Rational> alpha;
  for (std::size_t axis = 0; axis < alpha_sq.size(); ++axis) {
    auto root = exact_sqrt(alpha_sq[axis]);
    if (!root) {
      ApproximateFactorization approx;
      for (const auto& a : alpha_sq) approx.alpha.push_back(std::sqrt(a.get_d()));
      for (std::size_t i = 0; i < steps.size(); ++i) {
        approx.omega.push_back(weights[i].get_d() / monomial(steps[i], std::span<const double>(approx.alpha)));
      }
      std::size_t i = first_step_moving(steps, axis);
      return NotFactorable{Witness{i, steps.reflected_index(i, axis), axis,
                                   "alpha_" + std::to_string(axis + 1) + "^2 = " +
                                       to_string(alpha_sq[axis]) + " is not a rational square"},
                           approx};
    }
    alpha.push_back(*root);
  }

  StepWeights omega;
  omega.reserve(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) omega.push_back(weights[i] / monomial(steps[i], std::span<const Rational>(alpha)));
  // Consistent reflection ratios force ω to be reflection invariant.
  return FactoredWeighting{SymmetricWeighting{std::move(omega)}, std::move(alpha)};
}

WeightProfile weight_profile(const StepSet& steps, std::span<const Rational> alpha,
                             std::span<const Rational> omega) {
  if (alpha.size() != steps.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "alpha has wrong dimension");
  }
  require_positive(alpha, "alpha");
  WeightProfile profile;
  Rational product_minus = 1;
  for (const auto& a : alpha) {
    profile.alpha_plus.push_back(a > 1 ? a : Rational(1));
    profile.alpha_minus.push_back(a < 1 ? a : Rational(1));
    product_minus *= profile.alpha_minus.back();
    if (a <= 1) ++profile.r;
    if (a < 1) ++profile.m;
  }
  Rational s_plus = inventory_eval<Rational>(steps, profile.alpha_plus, omega);
  profile.t_minimal = 1 / (product_minus * s_plus);
  return profile;
}

std::vector<Rational> weighted_drift(const StepSet& steps, std::span<const Rational> alpha,
                                     std::span<const Rational> omega) {
  if (alpha.size() != steps.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "alpha has wrong dimension");
  }
  require_positive(alpha, "alpha");
  std::vector<Rational> out(steps.dimension(), Rational(0));
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Rational w = detail::weight_at(omega, i) * monomial(steps[i], alpha);
    for (std::size_t axis = 0; axis < steps.dimension(); ++axis) out[axis] += steps[i][axis] * w;
  }
  return out;
}

}  // namespace orthant
