#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "orthant/enumerate.hpp"
#include "orthant/oracle.hpp"
#include "orthant/weighting.hpp"
#include "support/brute_force.hpp"
#include "support/named.hpp"

namespace orthant {
namespace {

using R = Rational;

std::vector<Rational> vec(std::initializer_list<Rational> v) { return v; }

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

TEST(Enumerate, UnweightedTotals) {
  auto t2 = enumerate<Integer>(simple_step_set(2), {}, 3);
  EXPECT_EQ(t2.totals, ints({1, 2, 6, 18}));
  auto t1 = enumerate<Integer>(simple_step_set(1), {}, 4);
  EXPECT_EQ(t1.totals, ints({1, 1, 2, 3, 6}));
  EXPECT_EQ(t1.origin, ints({1, 0, 1, 0, 2}));
}

TEST(Enumerate, WeightedOneDimensional) {
  auto steps = simple_step_set(1);
  auto w = central_weights(steps, vec({R(2)}));
  auto t = enumerate<Rational>(steps, w, 2);
  EXPECT_EQ(t.totals[2], R(5));
}

TEST(Enumerate, KeptLayersByEndpoint) {
  EnumerateOptions options;
  options.keep_layers = true;
  auto t = enumerate<Integer>(simple_step_set(1), {}, 2, options);
  ASSERT_EQ(t.layers.size(), 3u);
  ASSERT_EQ(t.layers[2].size(), 2u);
  EXPECT_EQ(t.layers[2][0].point, std::vector<int>{0});
  EXPECT_EQ(t.layers[2][0].value, 1);
  EXPECT_EQ(t.layers[2][1].point, std::vector<int>{2});
  EXPECT_EQ(t.layers[2][1].value, 1);
  ASSERT_EQ(t.layers[1].size(), 1u);
  EXPECT_EQ(t.layers[1][0].point, std::vector<int>{1});
}

TEST(Enumerate, BudgetExceeded) {
  EnumerateOptions options;
  options.budget_bytes = std::uint64_t{1} << 30;
  try {
    enumerate<Rational>(simple_step_set(4), {}, 200, options);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    EXPECT_GT(e.required_bytes(), e.budget_bytes());
  }
}

TEST(Enumerate, MatchesBruteForce) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 1 + trial % 3;
    auto steps = testing::random_reflectable(d, rng);
    StepWeights w;
    for (std::size_t i = 0; i < steps.size(); ++i) w.push_back(testing::random_positive_rational(rng));
    const int n = d == 3 ? 4 : 6;
    for (bool constrained : {true, false}) {
      EnumerateOptions options;
      options.keep_layers = true;
      options.constrained = constrained;
      auto table = enumerate<Rational>(steps, w, n, options);
      auto brute = testing::brute_force(steps, w, n, constrained);
      EXPECT_EQ(table.totals, brute.totals);
      for (int k = 0; k <= n; ++k) {
        std::map<std::vector<int>, Rational> layer;
        for (const auto& entry : table.layers[k]) layer[entry.point] = entry.value;
        std::map<std::vector<int>, Rational> expected;
        for (const auto& [point, value] : brute.endpoints[k]) {
          if (value != 0) expected[point] = value;
        }
        EXPECT_EQ(layer, expected) << "n = " << k;
        const std::vector<int> origin(d, 0);
        EXPECT_EQ(table.origin[k], expected.count(origin) ? expected[origin] : R(0));
      }
    }
  }
}

TEST(Enumerate, ConservationAndDomination) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 1 + trial % 3;
    auto steps = testing::random_reflectable(d, rng);
    StepWeights w;
    for (std::size_t i = 0; i < steps.size(); ++i) w.push_back(testing::random_positive_rational(rng));
    Rational sum = 0;
    for (const auto& x : w) sum += x;
    const int n = 10;
    EnumerateOptions free_walks;
    free_walks.constrained = false;
    auto unconstrained = enumerate<Rational>(steps, w, n, free_walks);
    auto constrained = enumerate<Rational>(steps, w, n);
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(unconstrained.totals[k], pow(sum, k));
      EXPECT_LE(constrained.totals[k], unconstrained.totals[k]);
      EXPECT_GT(constrained.totals[k], 0);
    }
  }
}

TEST(Enumerate, FloatTracksExact) {
  auto steps = simple_step_set(2);
  auto w = central_weights(steps, vec({R(2), R(1, 2)}), R(3));
  auto exact = enumerate<Rational>(steps, w, 60);
  auto as_double = to_double(w);
  auto approx = enumerate<double>(steps, as_double, 60);
  for (int n = 0; n <= 60; ++n) {
    EXPECT_NEAR(approx.log_total(n), exact.log_total(n), 1e-9);
    if (n % 2 == 0) {
      EXPECT_NEAR(approx.log_origin(n), exact.log_origin(n), 1e-9);
    } else {
      EXPECT_EQ(approx.origin[n], 0.0);
      EXPECT_EQ(exact.origin[n], 0);
    }
  }
  // Float mode stays finite far past double range.
  auto long_run = enumerate<double>(simple_step_set(1), {}, 3000);
  EXPECT_TRUE(std::isfinite(long_run.log_total(3000)));
  EXPECT_GT(long_run.log_total(3000), 700);
}

TEST(VerifyEvaluation, ThreeDimensionalExample) {
  auto steps = simple_step_set(3);
  auto check = verify_evaluation(steps, testing::example_3d_weights(steps), 12);
  EXPECT_TRUE(check.equal);
  EXPECT_FALSE(check.first_failure.has_value());
  EXPECT_EQ(check.evaluated, check.weighted);
}

TEST(VerifyEvaluation, UnitAndOneDimensional) {
  auto s2 = simple_step_set(2);
  EXPECT_TRUE(verify_evaluation(s2, StepWeights(s2.size(), R(1)), 10).equal);
  auto s1 = simple_step_set(1);
  auto check = verify_evaluation(s1, central_weights(s1, vec({R(2)})), 2);
  EXPECT_TRUE(check.equal);
  EXPECT_EQ(check.weighted, R(5));
}

TEST(VerifyEvaluation, RejectsNonCentral) {
  auto s2 = simple_step_set(2);
  auto w = testing::named_weights(s2, {{'E', 2}, {'W', 1}, {'N', 1}, {'S', 1}});
  EXPECT_THROW(verify_evaluation(s2, w, 5), Error);
}

TEST(VerifyEvaluation, RandomCentralModels) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 1 + trial % 3;
    auto steps = testing::random_reflectable(d, rng);
    std::vector<Rational> alpha;
    for (std::size_t i = 0; i < d; ++i) alpha.push_back(testing::random_positive_rational(rng));
    auto w = central_weights(steps, alpha, testing::random_positive_rational(rng));
    auto check = verify_evaluation(steps, w, d == 3 ? 10 : 15);
    EXPECT_TRUE(check.equal) << "trial " << trial;
  }
}

TEST(Excursions, CatalanAndParity) {
  auto e1 = excursions(simple_step_set(1), 12);
  for (int n = 0; n <= 12; ++n) {
    if (n % 2) {
      EXPECT_EQ(e1[n], 0);
    } else {
      EXPECT_EQ(e1[n], testing::catalan(n / 2));
    }
  }
  auto e2 = excursions(simple_step_set(2), 6);
  EXPECT_EQ(e2[2], 2);
  // 2D simple excursions are C_k C_{k+1}.
  EXPECT_EQ(e2[4], testing::catalan(2) * testing::catalan(3));
  EXPECT_EQ(e2[6], testing::catalan(3) * testing::catalan(4));
}

}  // namespace
}  // namespace orthant
