#include "orthant/critical.hpp"

#include "orthant/weighting.hpp"

namespace orthant {

namespace {

std::vector<Rational> s_argument_for(std::span<const Rational> alpha, const std::vector<int>& signs) {
  std::vector<Rational> zeta;
  zeta.reserve(alpha.size());
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    zeta.push_back(alpha[k] > 1 ? alpha[k] : Rational(signs[k]));
  }
  return zeta;
}

}  // namespace

std::vector<CriticalPoint> enumerate_critical_points(const StepSet& steps,
                                                     std::span<const Rational> alpha,
                                                     std::span<const Rational> omega) {
  const std::size_t d = steps.dimension();
  if (alpha.size() != d) throw Error(ErrorKind::DimensionMismatch, "alpha has wrong dimension");
  if (d >= 8 * sizeof(std::size_t) - 1) throw Error(ErrorKind::DomainError, "dimension too large");
  // Validates positivity.
  (void)weight_profile(steps, alpha, omega);

  std::vector<CriticalPoint> points;
  points.reserve(std::size_t{1} << d);
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    CriticalPoint point;
    Rational x_product = 1;
    for (std::size_t k = 0; k < d; ++k) {
      int sign = (mask >> k) & 1 ? -1 : 1;
      point.signs.push_back(sign);
      point.x.push_back(sign * alpha[k]);
      x_product *= point.x.back();
    }
    // α x⁻¹ is exactly the sign vector.
    std::vector<Rational> sign_point(point.signs.begin(), point.signs.end());
    Rational s_at_signs = inventory_eval<Rational>(steps, sign_point, omega);
    if (s_at_signs != 0) point.t = 1 / (x_product * s_at_signs);
    point.s_argument = s_argument_for(alpha, point.signs);
    point.s_value = inventory_eval<Rational>(steps, point.s_argument, omega);
    points.push_back(std::move(point));
  }
  return points;
}

MinimalPoint minimal_point(const StepSet& steps, std::span<const Rational> alpha,
                           std::span<const Rational> omega) {
  auto profile = weight_profile(steps, alpha, omega);
  return {profile.alpha_minus, profile.t_minimal};
}

ContributingSet contributing_points(const StepSet& steps, std::span<const Rational> alpha,
                                    std::span<const Rational> omega) {
  auto profile = weight_profile(steps, alpha, omega);
  ContributingSet result;
  result.s_plus = inventory_eval<Rational>(steps, profile.alpha_plus, omega);
  for (auto& point : enumerate_critical_points(steps, alpha, omega)) {
    bool admissible = true;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      if (point.signs[k] < 0 && alpha[k] >= 1) admissible = false;
    }
    if (!admissible) continue;
    if (point.s_value == result.s_plus) {
      result.points.push_back({std::move(point), Parity::always_plus});
    } else if (point.s_value == -result.s_plus) {
      result.points.push_back({std::move(point), Parity::alternating});
    }
  }
  return result;
}

}  // namespace orthant
