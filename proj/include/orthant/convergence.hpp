#pragma once

#include <span>
#include <vector>

#include "orthant/rational.hpp"

namespace orthant {

/// Value at h = 0 of the polynomial in h interpolating (h_i, values_i).
/// With h = 1/n this is Richardson extrapolation of order size-1.
double extrapolate_to_zero(std::span<const double> h, std::span<const double> values);

/// Limit estimate of q(n) / ((β·base)^n n^exponent) along one parity class.
struct ParityEstimate {
  bool present = false;          ///< class has enough nonzero counts
  std::vector<int> ns;           ///< n values of the class
  std::vector<double> ratios;    ///< raw normalized ratios
  std::vector<int> sample_ns;    ///< points used by the order-2 extrapolant
  double order1 = 0.0;
  double order2 = 0.0;
  double value = 0.0;            ///< reported extrapolant (order 2)
  int order = 2;
  double residual = 0.0;         ///< |order2 - order1| at the last n
  double previous_residual = 0.0;
  bool converged = false;
};

struct ConvergenceReport {
  std::vector<int> ns;
  ParityEstimate even;
  ParityEstimate odd;

  bool non_convergence() const {
    return (even.present && !even.converged) || (odd.present && !odd.converged);
  }
};

/// `log_counts[n]` is log q(n) for n = 0..n_max (-inf for zero counts).
/// Requires n_max >= 40.
ConvergenceReport estimate_constant(std::span<const double> log_counts, const Rational& beta,
                                    const Rational& base, const Rational& exponent);

struct ExponentEstimate {
  double value = 0.0;
  double residual = 0.0;  ///< spread between fits with and without the 1/n² term
  bool converged = false;
  std::vector<int> window;
};

/// Polynomial exponent of q(n) (β·base)^{-n}: least-squares fit of
/// log q(n) - n log(β·base) = e log n + c0 + c1/n + c2/n² over the trailing
/// half of each parity class. Requires n_max >= 60.
ExponentEstimate estimate_exponent(std::span<const double> log_counts, const Rational& beta,
                                   const Rational& base);

}  // namespace orthant
