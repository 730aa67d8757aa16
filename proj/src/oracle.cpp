#include "orthant/oracle.hpp"

namespace orthant {

EvaluationCheck verify_evaluation(const StepSet& steps, const StepWeights& weights, int n_max,
                                  std::uint64_t budget_bytes) {
  auto classified = classify_central(steps, weights);
  auto* central = std::get_if<CentralWeighting>(&classified);
  if (!central) {
    throw Error(ErrorKind::NotCentral, std::get<NotCentral>(classified).witness.reason);
  }

  EnumerateOptions options;
  options.keep_layers = true;
  options.budget_bytes = budget_bytes;
  auto unweighted = enumerate<Integer>(steps, {}, n_max, options);
  options.keep_layers = false;
  auto weighted = enumerate<Rational>(steps, weights, n_max, options);

  EvaluationCheck check;
  check.n_max = n_max;
  Rational beta_power = 1;
  for (int n = 0; n <= n_max; ++n) {
    Rational evaluated = 0;
    for (const auto& entry : unweighted.layers[n]) {
      Rational term(entry.value);
      for (std::size_t i = 0; i < entry.point.size(); ++i) term *= pow(central->alpha[i], entry.point[i]);
      evaluated += term;
    }
    evaluated *= beta_power;
    check.evaluated = evaluated;
    check.weighted = weighted.totals[n];
    if (evaluated != weighted.totals[n]) {
      check.equal = false;
      check.first_failure = n;
      return check;
    }
    beta_power *= central->beta;
  }
  return check;
}

std::vector<Integer> excursions(const StepSet& steps, int n_max, std::uint64_t budget_bytes) {
  EnumerateOptions options;
  options.budget_bytes = budget_bytes;
  return enumerate<Integer>(steps, {}, n_max, options).origin;
}

}  // namespace orthant
