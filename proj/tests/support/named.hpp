#pragma once

// Compass-named weights for the simple step sets: E/W on axis 1, N/S on
// axis 2, U/D on axis 3.

#include <map>
#include <string>

#include "orthant/weighting.hpp"

namespace orthant::testing {

inline Step compass(char name, std::size_t dimension) {
  std::vector<int> c(dimension, 0);
  switch (name) {
    case 'E': c[0] = 1; break;
    case 'W': c[0] = -1; break;
    case 'N': c[1] = 1; break;
    case 'S': c[1] = -1; break;
    case 'U': c[2] = 1; break;
    case 'D': c[2] = -1; break;
  }
  return Step{c};
}

inline StepWeights named_weights(const StepSet& set, const std::map<char, Rational>& named) {
  std::map<Step, Rational> by_step;
  for (const auto& [name, w] : named) by_step[compass(name, set.dimension())] = w;
  return weights_from_map(set, by_step);
}

inline StepWeights example_3d_weights(const StepSet& set) {
  return named_weights(set, {{'E', 8}, {'W', 2}, {'N', 4}, {'S', 4}, {'U', 1}, {'D', 16}});
}

inline StepWeights noncentral_example_weights(const StepSet& set) {
  return named_weights(set, {{'E', Rational(3, 2)}, {'W', 6}, {'N', 35}, {'S', Rational(5, 7)}});
}

}  // namespace orthant::testing
