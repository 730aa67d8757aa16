#include "orthant/convergence.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace orthant {

double extrapolate_to_zero(std::span<const double> h, std::span<const double> values) {
  if (h.size() != values.size() || h.empty()) {
    throw std::invalid_argument("extrapolation needs matching, non-empty samples");
  }
  const auto k = static_cast<Eigen::Index>(h.size());
  // Scale h by its largest magnitude to keep the Vandermonde matrix tame.
  double scale = 0.0;
  for (double x : h) scale = std::max(scale, std::fabs(x));
  if (scale == 0.0) scale = 1.0;
  Eigen::MatrixXd vandermonde(k, k);
  Eigen::VectorXd rhs(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    double power = 1.0;
    for (Eigen::Index j = 0; j < k; ++j) {
      vandermonde(i, j) = power;
      power *= h[i] / scale;
    }
    rhs(i) = values[i];
  }
  Eigen::VectorXd coefficients = vandermonde.colPivHouseholderQr().solve(rhs);
  return coefficients(0);
}

namespace {

struct ClassSamples {
  std::vector<int> ns;
  std::vector<double> values;  ///< log q(n) - n log(β·base)
};

ClassSamples class_samples(std::span<const double> log_counts, double log_growth, int parity) {
  ClassSamples samples;
  for (std::size_t n = 1; n < log_counts.size(); ++n) {
    if (static_cast<int>(n % 2) != parity || !std::isfinite(log_counts[n])) continue;
    samples.ns.push_back(static_cast<int>(n));
    samples.values.push_back(log_counts[n] - static_cast<double>(n) * log_growth);
  }
  return samples;
}

// Richardson extrapolants of order 1 and 2 ending at n = end, using the
// points end, end - stride, end - 2·stride.
struct Extrapolants {
  double order1;
  double order2;
  std::vector<int> ns;
};

std::optional<Extrapolants> extrapolants_at(const std::vector<int>& ns, const std::vector<double>& ratios,
                                            int end, int stride) {
  std::vector<double> h, v;
  std::vector<int> used;
  for (int j = 0; j < 3; ++j) {
    int target = end - j * stride;
    auto it = std::find(ns.begin(), ns.end(), target);
    if (it == ns.end()) return std::nullopt;
    h.push_back(1.0 / target);
    v.push_back(ratios[static_cast<std::size_t>(it - ns.begin())]);
    used.push_back(target);
  }
  Extrapolants out;
  out.order1 = extrapolate_to_zero(std::span(h).first(2), std::span(v).first(2));
  out.order2 = extrapolate_to_zero(h, v);
  out.ns = used;
  return out;
}

ParityEstimate estimate_class(std::span<const double> log_counts, double log_growth, double exponent,
                              int parity) {
  ParityEstimate estimate;
  auto samples = class_samples(log_counts, log_growth, parity);
  estimate.ns = samples.ns;
  for (std::size_t i = 0; i < samples.ns.size(); ++i) {
    estimate.ratios.push_back(std::exp(samples.values[i] - exponent * std::log(samples.ns[i])));
  }
  if (samples.ns.size() < 8) return estimate;

  const int end = samples.ns.back();
  const int stride = 2 * std::max(1, end / 8);
  auto last = extrapolants_at(samples.ns, estimate.ratios, end, stride);
  if (!last) return estimate;
  estimate.present = true;
  estimate.order1 = last->order1;
  estimate.order2 = last->order2;
  estimate.value = last->order2;
  estimate.sample_ns = last->ns;
  estimate.residual = std::fabs(last->order2 - last->order1);

  auto previous = extrapolants_at(samples.ns, estimate.ratios, end - stride, stride);
  estimate.previous_residual = previous ? std::fabs(previous->order2 - previous->order1) : estimate.residual;
  estimate.converged = estimate.residual <= estimate.previous_residual ||
                       estimate.residual <= 1e-9 * std::fabs(estimate.value);
  return estimate;
}

void require_length(std::span<const double> log_counts, int minimum, const char* what) {
  if (static_cast<int>(log_counts.size()) - 1 < minimum) {
    throw std::invalid_argument(std::string(what) + " needs counts up to n >= " + std::to_string(minimum));
  }
}

// Least-squares fit of value(n) = e log n + c0 + c1 (m/n) [+ c2 (m/n)²].
double fit_exponent(const std::vector<int>& ns, const std::vector<double>& values, bool quadratic) {
  const auto rows = static_cast<Eigen::Index>(ns.size());
  const Eigen::Index cols = quadratic ? 4 : 3;
  const double m = ns.back();
  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double n = ns[static_cast<std::size_t>(i)];
    design(i, 0) = std::log(n / m);
    design(i, 1) = 1.0;
    design(i, 2) = m / n;
    if (quadratic) design(i, 3) = (m / n) * (m / n);
    rhs(i) = values[static_cast<std::size_t>(i)];
  }
  Eigen::VectorXd solution = design.colPivHouseholderQr().solve(rhs);
  return solution(0);
}

}  // namespace

ConvergenceReport estimate_constant(std::span<const double> log_counts, const Rational& beta,
                                    const Rational& base, const Rational& exponent) {
  require_length(log_counts, 40, "estimate_constant");
  const double log_growth = log_abs(beta) + log_abs(base);
  ConvergenceReport report;
  for (std::size_t n = 1; n < log_counts.size(); ++n) report.ns.push_back(static_cast<int>(n));
  report.even = estimate_class(log_counts, log_growth, exponent.get_d(), 0);
  report.odd = estimate_class(log_counts, log_growth, exponent.get_d(), 1);
  return report;
}

ExponentEstimate estimate_exponent(std::span<const double> log_counts, const Rational& beta,
                                   const Rational& base) {
  require_length(log_counts, 60, "estimate_exponent");
  const double log_growth = log_abs(beta) + log_abs(base);
  ExponentEstimate estimate;
  double total = 0.0;
  int classes = 0;
  for (int parity : {0, 1}) {
    auto samples = class_samples(log_counts, log_growth, parity);
    if (samples.ns.size() < 8) continue;
    const int end = samples.ns.back();
    std::vector<int> ns;
    std::vector<double> values;
    for (std::size_t i = 0; i < samples.ns.size(); ++i) {
      if (2 * samples.ns[i] >= end) {
        ns.push_back(samples.ns[i]);
        values.push_back(samples.values[i]);
      }
    }
    if (ns.size() < 6) continue;
    const double quadratic = fit_exponent(ns, values, true);
    const double linear = fit_exponent(ns, values, false);
    total += quadratic;
    ++classes;
    estimate.residual = std::max(estimate.residual, std::fabs(quadratic - linear));
    estimate.window.insert(estimate.window.end(), ns.begin(), ns.end());
  }
  if (classes == 0) {
    estimate.value = std::nan("");
    return estimate;
  }
  std::sort(estimate.window.begin(), estimate.window.end());
  estimate.value = total / classes;
  estimate.converged = estimate.residual < 0.05;
  return estimate;
}

}  // namespace orthant
