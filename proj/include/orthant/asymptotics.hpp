#pragma once

#include <optional>
#include <span>
#include <vector>

#include "orthant/critical.hpp"
#include "orthant/rational.hpp"
#include "orthant/stepset.hpp"
#include "orthant/weighting.hpp"

namespace orthant {

/// Where P_j is evaluated for the α_j <= 1 constant factors.
enum class PEvaluation {
  at_point,  ///< P_j at the contributing point's ζ with coordinate j removed
  at_ones,   ///< P_j(1, ..., 1)
};

/// Constant factor of one axis at a contributing point:
///   α_j > 1          1 - 1/α_j²
///   α_j = 1          (2π)^{-1/2} (2P_j)^{-1/2} S₊^{1/2} · 2
///   α_j < 1, z = +   (2π)^{-1/2} (2P_j)^{-3/2} S₊^{3/2} · 2/(1-α_j)²
///   α_j < 1, z = -   (2π)^{-1/2} (2P_j)^{-3/2} S₊^{3/2} · 2/(1+α_j)²
/// `p_j` is ignored for α_j > 1. Throws DomainError for z = - with α_j >= 1
/// or for p_j <= 0 where it is used.
double constant_factor(const Rational& alpha_j, int z_sign, const Rational& s_plus,
                       const Rational& p_j);

struct AxisFactor {
  Rational alpha;
  int sign = 1;
  std::optional<Rational> p_value;  ///< effective P_j; absent when α_j > 1
  double value = 0.0;
};

struct PointContribution {
  std::vector<int> signs;
  std::vector<Rational> s_argument;
  Rational s_value;
  Parity parity = Parity::always_plus;
  std::vector<AxisFactor> factors;
  double product = 0.0;
};

/// q(n) ~ γ · (β·base)^n · n^exponent, γ depending on the parity of n.
struct AsymptoticFormula {
  Rational beta{1};
  Rational base{1};
  Rational exponent{0};  ///< -r/2 - m
  double gamma_even = 1.0;
  double gamma_odd = 1.0;
  std::vector<PointContribution> breakdown;

  Rational growth() const { return beta * base; }
  double gamma(long n) const { return n % 2 == 0 ? gamma_even : gamma_odd; }
};

/// Formula for a central weighting (β reported separately).
AsymptoticFormula asymptotic_formula(const StepSet& steps, const CentralWeighting& weighting,
                                     PEvaluation p_evaluation = PEvaluation::at_point);

/// Formula for ω-symmetric times α-central weights; base is S_ω(α⁺), β = 1.
AsymptoticFormula asymptotic_formula(const StepSet& steps, const FactoredWeighting& weighting,
                                     PEvaluation p_evaluation = PEvaluation::at_point);

/// General entry point; `omega` empty means ω ≡ 1.
AsymptoticFormula asymptotic_formula(const StepSet& steps, std::span<const Rational> alpha,
                                     std::span<const Rational> omega, const Rational& beta,
                                     PEvaluation p_evaluation = PEvaluation::at_point);

/// S(α⁺), exact.
Rational exponential_growth(const StepSet& steps, std::span<const Rational> alpha,
                            std::span<const Rational> omega = {});

/// log of β^n base^n n^exponent γ(n), computed in log space.
double log_evaluate_formula(const AsymptoticFormula& formula, long n);

/// β^n base^n n^exponent γ(n). Throws std::overflow_error when the value
/// does not fit a double.
double evaluate_formula(const AsymptoticFormula& formula, long n);

}  // namespace orthant
