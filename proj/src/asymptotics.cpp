#include "orthant/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace orthant {

double constant_factor(const Rational& alpha_j, int z_sign, const Rational& s_plus,
                       const Rational& p_j) {
  if (z_sign != 1 && z_sign != -1) throw Error(ErrorKind::DomainError, "sign must be +1 or -1");
  if (z_sign == -1 && alpha_j >= 1) {
    throw Error(ErrorKind::DomainError, "negative critical coordinate requires alpha_j < 1");
  }
  if (alpha_j <= 0) throw Error(ErrorKind::DomainError, "alpha_j must be positive");
  if (alpha_j > 1) return 1.0 - 1.0 / Rational(alpha_j * alpha_j).get_d();
  if (p_j <= 0) throw Error(ErrorKind::DomainError, "P_j must be positive, got " + to_string(p_j));

  const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  const double two_p = 2.0 * p_j.get_d();
  const double s = s_plus.get_d();
  if (alpha_j == 1) return inv_sqrt_2pi * std::pow(two_p, -0.5) * std::sqrt(s) * 2.0;
  const double a = alpha_j.get_d();
  const double shift = z_sign == 1 ? 1.0 - a : 1.0 + a;
  return inv_sqrt_2pi * std::pow(two_p, -1.5) * std::pow(s, 1.5) * 2.0 / (shift * shift);
}

namespace {

// P_j entering the constant at ζ. The (x_j + 1/x_j) P_j term of S, read
// relative to S(ζ), has curvature ζ_j P_j(ζ) / S(ζ); its positive magnitude
// ζ_j · P_j · sign(S(ζ)) is what the factor uses. For all-positive points
// this is plain P_j(ζ).
Rational effective_p(const StepSet& steps, std::size_t axis, const std::vector<Rational>& zeta,
                     const Rational& s_value, std::span<const Rational> omega,
                     PEvaluation p_evaluation) {
  std::vector<Rational> rest;
  for (std::size_t k = 0; k < zeta.size(); ++k) {
    if (k == axis) continue;
    rest.push_back(p_evaluation == PEvaluation::at_point ? zeta[k] : Rational(1));
  }
  Rational p = pq_eval<Rational>(steps, axis, rest, omega).p;
  if (p_evaluation == PEvaluation::at_ones) return p;
  Rational effective = zeta[axis] * p;
  return s_value < 0 ? Rational(-effective) : effective;
}

}  // namespace

AsymptoticFormula asymptotic_formula(const StepSet& steps, std::span<const Rational> alpha,
                                     std::span<const Rational> omega, const Rational& beta,
                                     PEvaluation p_evaluation) {
  if (beta <= 0) throw Error(ErrorKind::NonPositiveWeight, "beta must be positive");
  if (!omega.empty()) {
    StepWeights w(omega.begin(), omega.end());
    auto symmetric = classify_symmetric(steps, w);
    if (auto* failure = std::get_if<NotSymmetric>(&symmetric)) {
      throw Error({{ErrorKind::NotSymmetric,
                    "omega differs between " + to_string(steps[failure->step]) + " and its reflection",
                    steps[failure->step].components, failure->axis}});
    }
  }
  auto profile = weight_profile(steps, alpha, omega);
  auto contributing = contributing_points(steps, alpha, omega);

  AsymptoticFormula formula;
  formula.beta = beta;
  formula.base = contributing.s_plus;
  formula.exponent = Rational(-profile.r) / 2 - profile.m;
  formula.gamma_even = 0.0;
  formula.gamma_odd = 0.0;
  for (const auto& member : contributing.points) {
    PointContribution contribution;
    contribution.signs = member.point.signs;
    contribution.s_argument = member.point.s_argument;
    contribution.s_value = member.point.s_value;
    contribution.parity = member.parity;
    contribution.product = 1.0;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      AxisFactor factor;
      factor.alpha = alpha[j];
      factor.sign = member.point.signs[j];
      Rational p = 0;
      if (alpha[j] <= 1) {
        p = effective_p(steps, j, member.point.s_argument, member.point.s_value, omega, p_evaluation);
        factor.p_value = p;
      }
      factor.value = constant_factor(alpha[j], factor.sign, contributing.s_plus, p);
      contribution.product *= factor.value;
      contribution.factors.push_back(std::move(factor));
    }
    formula.gamma_even += contribution.product;
    formula.gamma_odd += member.parity == Parity::alternating ? -contribution.product : contribution.product;
    formula.breakdown.push_back(std::move(contribution));
  }
  return formula;
}

AsymptoticFormula asymptotic_formula(const StepSet& steps, const CentralWeighting& weighting,
                                     PEvaluation p_evaluation) {
  return asymptotic_formula(steps, weighting.alpha, {}, weighting.beta, p_evaluation);
}

AsymptoticFormula asymptotic_formula(const StepSet& steps, const FactoredWeighting& weighting,
                                     PEvaluation p_evaluation) {
  return asymptotic_formula(steps, weighting.alpha, weighting.omega.omega, Rational(1), p_evaluation);
}

Rational exponential_growth(const StepSet& steps, std::span<const Rational> alpha,
                            std::span<const Rational> omega) {
  auto profile = weight_profile(steps, alpha, omega);
  return inventory_eval<Rational>(steps, profile.alpha_plus, omega);
}

double log_evaluate_formula(const AsymptoticFormula& formula, long n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const double nd = static_cast<double>(n);
  return nd * (log_abs(formula.beta) + log_abs(formula.base)) +
         formula.exponent.get_d() * std::log(nd) + std::log(formula.gamma(n));
}

double evaluate_formula(const AsymptoticFormula& formula, long n) {
  double log_value = log_evaluate_formula(formula, n);
  if (log_value > std::log(std::numeric_limits<double>::max())) {
    throw std::overflow_error("formula value at n = " + std::to_string(n) + " exceeds double range");
  }
  return std::exp(log_value);
}

}  // namespace orthant
