#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orthant/rational.hpp"
#include "orthant/stepset.hpp"

namespace orthant {

/// One of the 2^d solutions x_k = ±α_k of the critical-point system.
struct CriticalPoint {
  std::vector<int> signs;  ///< +1 / -1 per axis
  std::vector<Rational> x;  ///< x_k = signs_k α_k
  /// t = 1 / (x_1⋯x_d · S(α x⁻¹)); empty when S(α x⁻¹) = 0 (no finite t).
  std::optional<Rational> t;
  /// ζ_k = α_k when α_k > 1, else signs_k.
  std::vector<Rational> s_argument;
  Rational s_value;  ///< S(ζ)
};

enum class Parity { always_plus, alternating };

struct ContributingPoint {
  CriticalPoint point;
  Parity parity;
};

struct ContributingSet {
  Rational s_plus;  ///< S(α⁺)
  std::vector<ContributingPoint> points;
};

/// All 2^d sign patterns, ordered as a binary counter: bit k of the index
/// set means signs_k = -1. Index 0 is the all-positive point. `omega`
/// empty means the unweighted inventory.
std::vector<CriticalPoint> enumerate_critical_points(const StepSet& steps,
                                                     std::span<const Rational> alpha,
                                                     std::span<const Rational> omega = {});

struct MinimalPoint {
  std::vector<Rational> x;  ///< α⁻
  Rational t;               ///< 1 / (∏ α⁻ · S(α⁺))
};

MinimalPoint minimal_point(const StepSet& steps, std::span<const Rational> alpha,
                           std::span<const Rational> omega = {});

/// Critical points with negative signs only where α_j < 1 and with
/// |S(ζ)| = S(α⁺) exactly. A point with S(ζ) = -S(α⁺) alternates with the
/// parity of n.
ContributingSet contributing_points(const StepSet& steps, std::span<const Rational> alpha,
                                    std::span<const Rational> omega = {});

}  // namespace orthant
