#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthant/error.hpp"
#include "orthant/rational.hpp"

namespace orthant {

/// A unit step in {-1, 0, 1}^d.
struct Step {
  std::vector<int> components;

  std::size_t dimension() const { return components.size(); }
  int operator[](std::size_t i) const { return components[i]; }

  /// The step with component `axis` negated.
  Step reflected(std::size_t axis) const;

  auto operator<=>(const Step&) const = default;
  bool operator==(const Step&) const = default;
};

/// "(1,0,-1)"
std::string to_string(const Step& step);
/// Accepts "(1,0,-1)" or "1,0,-1"; whitespace ignored.
Step parse_step(std::string_view text);

/// A validated reflectable step set. Steps are kept in sorted order, so two
/// sets with the same members compare and serialize identically.
class StepSet {
 public:
  /// Checks every invariant and throws orthant::Error listing all
  /// violations found (not just the first).
  static StepSet validate(std::size_t dimension, std::span<const std::vector<int>> raw_steps);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return steps_.size(); }
  const std::vector<Step>& steps() const { return steps_; }
  const Step& operator[](std::size_t i) const { return steps_[i]; }

  std::optional<std::size_t> index_of(const Step& step) const;
  /// Index of the reflection of step i across `axis`.
  std::size_t reflected_index(std::size_t i, std::size_t axis) const {
    return reflections_[i * dimension_ + axis];
  }

  bool operator==(const StepSet& other) const { return steps_ == other.steps_; }

 private:
  StepSet(std::size_t dimension, std::vector<Step> steps);

  std::size_t dimension_;
  std::vector<Step> steps_;
  std::vector<std::size_t> reflections_;
};

/// {±e_1, ..., ±e_d}
StepSet simple_step_set(std::size_t dimension);

/// x^σ for a unit step; only multiplications and divisions by x_i.
template <class Scalar>
Scalar monomial(const Step& step, std::span<const Scalar> x) {
  Scalar value = 1;
  for (std::size_t i = 0; i < step.dimension(); ++i) {
    if (step[i] == 1) {
      value *= x[i];
    } else if (step[i] == -1) {
      value /= x[i];
    }
  }
  return value;
}

namespace detail {

template <class Scalar>
void require_nonzero(std::span<const Scalar> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) {
      throw Error({{ErrorKind::ZeroCoordinate,
                    "evaluation coordinate " + std::to_string(i + 1) + " is zero",
                    {},
                    i}});
    }
  }
}

template <class Scalar>
Scalar weight_at(std::span<const Scalar> weights, std::size_t i) {
  return weights.empty() ? Scalar(1) : Scalar(weights[i]);
}

}  // namespace detail

/// Inventory S(x) = Σ_σ w_σ x^σ; weights default to 1 (the plain inventory).
template <class Scalar>
Scalar inventory_eval(const StepSet& steps, std::span<const Scalar> x,
                      std::span<const Scalar> weights = {}) {
  if (x.size() != steps.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "evaluation point has wrong dimension");
  }
  detail::require_nonzero(x);
  Scalar total = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    total += detail::weight_at(weights, i) * monomial(steps[i], x);
  }
  return total;
}

template <class Scalar>
struct PQ {
  Scalar p;
  Scalar q;
};

/// Splits S(x) = (x_k + 1/x_k) P_k + Q_k. `x_rest` omits coordinate k.
/// P_k is read off the σ_k = +1 slice and checked against the σ_k = -1
/// slice, which must agree for a reflection-symmetric (weighted) set.
template <class Scalar>
PQ<Scalar> pq_eval(const StepSet& steps, std::size_t axis, std::span<const Scalar> x_rest,
                   std::span<const Scalar> weights = {}) {
  const std::size_t d = steps.dimension();
  if (axis >= d || x_rest.size() + 1 != d) {
    throw Error(ErrorKind::DimensionMismatch, "bad axis or evaluation point for P/Q split");
  }
  detail::require_nonzero(x_rest);
  std::vector<Scalar> full;
  full.reserve(d);
  for (std::size_t i = 0, j = 0; i < d; ++i) full.push_back(i == axis ? Scalar(1) : x_rest[j++]);
  const std::span<const Scalar> point(full);

  Scalar plus = 0, minus = 0, zero = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    // Coordinate `axis` is 1 in `full`, so the monomial drops x_k.
    Scalar term = detail::weight_at(weights, i) * monomial(steps[i], point);
    switch (steps[i][axis]) {
      case 1: plus += term; break;
      case -1: minus += term; break;
      default: zero += term; break;
    }
  }
  if (plus != minus) {
    throw Error(ErrorKind::NotSymmetric,
                "P_" + std::to_string(axis + 1) + " differs between the +1 and -1 slices");
  }
  return {plus, zero};
}

/// Component-wise sum of the steps.
std::vector<int> drift(const StepSet& steps);

}  // namespace orthant
