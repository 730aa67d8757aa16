#pragma once

// Test-only oracles, independent of the library's DP: explicit depth-first
// enumeration of every step sequence, plus a few closed forms.

#include <map>
#include <random>
#include <vector>

#include "orthant/rational.hpp"
#include "orthant/stepset.hpp"

namespace orthant::testing {

struct BruteForceCounts {
  std::vector<Rational> totals;                                 // by n
  std::vector<std::map<std::vector<int>, Rational>> endpoints;  // by n
};

inline void walk_dfs(const std::vector<std::vector<int>>& steps, const std::vector<Rational>& weights,
                     std::vector<int>& position, const Rational& weight, int depth, int n_max,
                     bool constrained, BruteForceCounts& out) {
  out.totals[depth] += weight;
  out.endpoints[depth][position] += weight;
  if (depth == n_max) return;
  for (std::size_t s = 0; s < steps.size(); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < position.size(); ++i) {
      if (constrained && position[i] + steps[s][i] < 0) ok = false;
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < position.size(); ++i) position[i] += steps[s][i];
    walk_dfs(steps, weights, position, weight * weights[s], depth + 1, n_max, constrained, out);
    for (std::size_t i = 0; i < position.size(); ++i) position[i] -= steps[s][i];
  }
}

/// Weighted sums over all walks of length <= n_max; empty weights mean 1.
inline BruteForceCounts brute_force(const StepSet& set, std::vector<Rational> weights, int n_max,
                                    bool constrained = true) {
  std::vector<std::vector<int>> steps;
  for (const auto& s : set.steps()) steps.push_back(s.components);
  if (weights.empty()) weights.assign(steps.size(), Rational(1));
  BruteForceCounts out;
  out.totals.assign(n_max + 1, Rational(0));
  out.endpoints.resize(n_max + 1);
  std::vector<int> position(set.dimension(), 0);
  walk_dfs(steps, weights, position, Rational(1), 0, n_max, constrained, out);
  return out;
}

inline Integer binomial(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

inline Integer catalan(long k) { return binomial(2 * k, k) / (k + 1); }

/// Reflectable step set built from a random nonempty union of reflection
/// orbits; retried until every dimension moves.
inline StepSet random_reflectable(std::size_t dimension, std::mt19937& rng) {
  std::vector<std::vector<int>> orbit_reps;  // vectors in {0,1}^d
  for (std::size_t mask = 1; mask < (std::size_t{1} << dimension); ++mask) {
    std::vector<int> rep(dimension);
    for (std::size_t i = 0; i < dimension; ++i) rep[i] = (mask >> i) & 1;
    orbit_reps.push_back(rep);
  }
  std::bernoulli_distribution pick(0.5);
  while (true) {
    std::vector<std::vector<int>> raw;
    std::vector<bool> moves(dimension, false);
    for (const auto& rep : orbit_reps) {
      if (!pick(rng)) continue;
      std::size_t nonzero = 0;
      for (int c : rep) nonzero += c;
      for (std::size_t signs = 0; signs < (std::size_t{1} << nonzero); ++signs) {
        std::vector<int> step = rep;
        std::size_t bit = 0;
        for (std::size_t i = 0; i < dimension; ++i) {
          if (step[i] == 0) continue;
          if ((signs >> bit++) & 1) step[i] = -1;
          moves[i] = true;
        }
        raw.push_back(step);
      }
    }
    bool all_move = !raw.empty();
    for (bool m : moves) all_move = all_move && m;
    if (!all_move) continue;
    if (pick(rng)) raw.push_back(std::vector<int>(dimension, 0));
    return StepSet::validate(dimension, raw);
  }
}

inline Rational random_positive_rational(std::mt19937& rng) {
  static const int choices[][2] = {{1, 4}, {1, 3}, {1, 2}, {2, 3}, {1, 1}, {1, 1}, {3, 2}, {2, 1}, {3, 1}, {5, 2}};
  std::uniform_int_distribution<int> index(0, 9);
  const auto& c = choices[index(rng)];
  return Rational(c[0], c[1]);
}

}  // namespace orthant::testing
