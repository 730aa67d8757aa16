#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

#include "orthant/error.hpp"
#include "orthant/rational.hpp"
#include "orthant/stepset.hpp"

namespace orthant {

struct EnumerateOptions {
  bool keep_layers = false;  ///< keep every endpoint-resolved layer, not just totals
  bool constrained = true;   ///< false drops the orthant constraint (free walks)
  std::uint64_t budget_bytes = std::uint64_t{1} << 30;
};

template <class Value>
struct LayerEntry {
  std::vector<int> point;
  Value value;
};

/// Walk counts by length. Exact value types (Integer, Rational) store true
/// values and log_scale is zero; double tables renormalize every layer to
/// total 1 and carry the log of the true total in log_scale.
template <class Value>
struct EnumerationTable {
  std::size_t dimension = 0;
  int n_max = 0;
  std::vector<Value> totals;
  std::vector<Value> origin;  ///< walks returning to the origin
  std::vector<double> log_scale;
  /// Nonzero entries per layer in lexicographic point order; only filled
  /// with EnumerateOptions::keep_layers.
  std::vector<std::vector<LayerEntry<Value>>> layers;

  double log_total(int n) const { return log_abs(totals[n]) + log_scale[n]; }
  double log_origin(int n) const { return log_abs(origin[n]) + log_scale[n]; }

  std::vector<double> log_totals() const {
    std::vector<double> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(log_total(n));
    return out;
  }
  std::vector<double> log_origins() const {
    std::vector<double> out;
    for (int n = 0; n <= n_max; ++n) out.push_back(log_origin(n));
    return out;
  }
};

template <class Value>
constexpr std::uint64_t bytes_per_value() {
  if constexpr (std::is_same_v<Value, double>) {
    return sizeof(double);
  } else if constexpr (std::is_same_v<Value, Integer>) {
    return 32;
  } else {
    return 64;
  }
}

/// Rough memory needed by enumerate(); two dense layers plus kept layers.
template <class Value>
double estimate_bytes(std::size_t dimension, int n_max, const EnumerateOptions& options) {
  const double extent = options.constrained ? n_max + 1.0 : 2.0 * n_max + 1.0;
  const double cells = std::pow(extent, static_cast<double>(dimension));
  double bytes = 2.0 * cells * static_cast<double>(bytes_per_value<Value>());
  if (options.keep_layers) {
    // Layer n occupies at most (n+1)^d cells; sum over n is ~ cells·n/(d+1).
    const double entry = static_cast<double>(bytes_per_value<Value>() + 32 + 4 * dimension);
    bytes += cells * (n_max + 1.0) / (dimension + 1.0) * entry;
  }
  return bytes;
}

/// Layer-by-layer sweep over a dense box: layer n+1 is layer n pushed along
/// every step, multiplied by the step weight, dropping points that leave
/// the orthant. `weights` empty counts unweighted walks.
template <class Value>
EnumerationTable<Value> enumerate(const StepSet& steps, std::span<const Value> weights, int n_max,
                                  const EnumerateOptions& options = {}) {
  if (n_max < 0) throw Error(ErrorKind::DomainError, "n_max must be non-negative");
  if (!weights.empty() && weights.size() != steps.size()) {
    throw Error(ErrorKind::WeightDomainMismatch, "weights do not cover the step set");
  }
  const std::size_t d = steps.dimension();
  const double needed = estimate_bytes<Value>(d, n_max, options);
  if (needed > static_cast<double>(options.budget_bytes)) {
    const double capped = std::min(needed, static_cast<double>(std::numeric_limits<std::uint64_t>::max()));
    throw BudgetExceeded(static_cast<std::uint64_t>(capped), options.budget_bytes);
  }

  const long offset = options.constrained ? 0 : n_max;
  const long extent = options.constrained ? n_max + 1 : 2L * n_max + 1;
  std::vector<long> stride(d);
  long cells = 1;
  for (std::size_t i = d; i-- > 0;) {
    stride[i] = cells;
    cells *= extent;
  }
  std::vector<long> delta(steps.size(), 0);
  for (std::size_t s = 0; s < steps.size(); ++s) {
    for (std::size_t i = 0; i < d; ++i) delta[s] += steps[s][i] * stride[i];
  }
  long origin_index = 0;
  for (std::size_t i = 0; i < d; ++i) origin_index += offset * stride[i];

  std::vector<Value> current(static_cast<std::size_t>(cells), Value(0));
  std::vector<Value> next(static_cast<std::size_t>(cells), Value(0));
  current[origin_index] = Value(1);

  EnumerationTable<Value> table;
  table.dimension = d;
  table.n_max = n_max;

  std::vector<int> coords(d);
  // Visits the reachable sub-box of layer n in lexicographic order.
  auto for_each_cell = [&](int n, auto&& visit) {
    const long lo = options.constrained ? 0 : offset - n;
    const long hi = offset + n;
    for (std::size_t i = 0; i < d; ++i) coords[i] = static_cast<int>(lo);
    long index = 0;
    for (std::size_t i = 0; i < d; ++i) index += lo * stride[i];
    while (true) {
      visit(index);
      std::size_t axis = d;
      while (axis-- > 0) {
        if (coords[axis] < hi) {
          ++coords[axis];
          index += stride[axis];
          break;
        }
        index -= (coords[axis] - lo) * stride[axis];
        coords[axis] = static_cast<int>(lo);
      }
      if (axis == static_cast<std::size_t>(-1)) break;
    }
  };

  auto record = [&](int n, double log_scale) {
    Value total(0);
    for_each_cell(n, [&](long index) { total += current[index]; });
    table.totals.push_back(total);
    table.origin.push_back(current[origin_index]);
    table.log_scale.push_back(log_scale);
    if (options.keep_layers) {
      std::vector<LayerEntry<Value>> layer;
      for_each_cell(n, [&](long index) {
        if (current[index] != 0) {
          std::vector<int> point(coords);
          for (auto& c : point) c -= static_cast<int>(offset);
          layer.push_back({std::move(point), current[index]});
        }
      });
      table.layers.push_back(std::move(layer));
    }
  };

  double log_scale = 0.0;
  record(0, log_scale);
  for (int n = 0; n < n_max; ++n) {
    for_each_cell(n, [&](long index) {
      const Value& value = current[index];
      if (value == 0) return;
      for (std::size_t s = 0; s < steps.size(); ++s) {
        if (options.constrained) {
          bool leaves = false;
          for (std::size_t i = 0; i < d; ++i) {
            if (coords[i] == 0 && steps[s][i] < 0) {
              leaves = true;
              break;
            }
          }
          if (leaves) continue;
        }
        if (weights.empty()) {
          next[index + delta[s]] += value;
        } else {
          next[index + delta[s]] += value * weights[s];
        }
      }
      current[index] = Value(0);
    });
    std::swap(current, next);
    if constexpr (std::is_same_v<Value, double>) {
      double total = 0.0;
      for_each_cell(n + 1, [&](long index) { total += current[index]; });
      if (total > 0.0) {
        for_each_cell(n + 1, [&](long index) { current[index] /= total; });
        log_scale += std::log(total);
      }
    }
    record(n + 1, log_scale);
  }
  return table;
}

}  // namespace orthant
