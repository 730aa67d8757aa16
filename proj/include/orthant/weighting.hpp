#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "orthant/rational.hpp"
#include "orthant/stepset.hpp"

namespace orthant {

/// Per-step weights, aligned with StepSet::steps().
using StepWeights = std::vector<Rational>;

/// Builds aligned weights from a step-keyed map. The map's domain must be
/// exactly the step set and every weight must be positive.
StepWeights weights_from_map(const StepSet& steps, const std::map<Step, Rational>& weights);

/// w_σ = β ∏ α_i^{σ_i}
StepWeights central_weights(const StepSet& steps, std::span<const Rational> alpha,
                            const Rational& beta = Rational(1));

/// w_σ = ω_σ ∏ α_i^{σ_i}
StepWeights combine_weights(const StepSet& steps, std::span<const Rational> omega,
                            std::span<const Rational> alpha);

struct CentralWeighting {
  std::vector<Rational> alpha;
  Rational beta;
};

/// A weighting invariant under every axis reflection.
struct SymmetricWeighting {
  StepWeights omega;
};

/// w = ω · α^σ with ω reflection-symmetric; any overall scale lives in ω.
struct FactoredWeighting {
  SymmetricWeighting omega;
  std::vector<Rational> alpha;
};

/// Floating-point factorization for weightings whose squared ratios are not
/// perfect rational squares.
struct ApproximateFactorization {
  std::vector<double> alpha;
  std::vector<double> omega;
  double beta = 1.0;
};

/// Two steps (and, for per-axis failures, the axis) that break a property.
struct Witness {
  std::size_t first = 0;
  std::size_t second = 0;
  std::optional<std::size_t> axis;
  std::string reason;
};

struct NotCentral {
  Witness witness;
  /// Set when the weighting is central but α or β is irrational.
  std::optional<ApproximateFactorization> approximate;
};

struct NotSymmetric {
  std::size_t step = 0;
  std::size_t axis = 0;
};

struct NotFactorable {
  Witness witness;
  /// Set when only the exact square root failed; the weighting factors in
  /// floating point.
  std::optional<ApproximateFactorization> approximate;
};

std::variant<CentralWeighting, NotCentral> classify_central(const StepSet& steps,
                                                            const StepWeights& weights);

std::variant<SymmetricWeighting, NotSymmetric> classify_symmetric(const StepSet& steps,
                                                                  const StepWeights& weights);

std::variant<FactoredWeighting, NotFactorable> factor_weighting(const StepSet& steps,
                                                                const StepWeights& weights);

struct WeightProfile {
  std::vector<Rational> alpha_plus;
  std::vector<Rational> alpha_minus;
  int r = 0;  ///< number of α_i <= 1
  int m = 0;  ///< number of α_i < 1
  Rational t_minimal;
};

/// α⁺, α⁻, r, m and t = 1 / (∏ α⁻ · S_ω(α⁺)). `omega` empty means ω ≡ 1.
WeightProfile weight_profile(const StepSet& steps, std::span<const Rational> alpha,
                             std::span<const Rational> omega = {});

/// Σ_σ σ_i ω_σ ∏ α_j^{σ_j}; `omega` empty means ω ≡ 1.
std::vector<Rational> weighted_drift(const StepSet& steps, std::span<const Rational> alpha,
                                     std::span<const Rational> omega = {});

}  // namespace orthant
