#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orthant/enumerate.hpp"
#include "orthant/rational.hpp"
#include "orthant/stepset.hpp"
#include "orthant/weighting.hpp"

namespace orthant {

struct EvaluationCheck {
  bool equal = true;
  int n_max = 0;
  std::optional<int> first_failure;
  Rational evaluated;  ///< Σ_ι q(ι; n) α^ι β^n at the failing n (or n_max)
  Rational weighted;   ///< weighted DP total at the same n
};

/// Checks, exactly for every n <= n_max, that the unweighted endpoint table
/// evaluated at α and rescaled by β^n equals the weighted walk total.
/// Throws Error(NotCentral) when the weights have no exact (α, β).
EvaluationCheck verify_evaluation(const StepSet& steps, const StepWeights& weights, int n_max,
                                  std::uint64_t budget_bytes = std::uint64_t{1} << 30);

/// Exact numbers of walks returning to the origin, n = 0..n_max.
std::vector<Integer> excursions(const StepSet& steps, int n_max,
                                std::uint64_t budget_bytes = std::uint64_t{1} << 30);

}  // namespace orthant
