#include "orthant/stepset.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace orthant {

Step Step::reflected(std::size_t axis) const {
  Step out = *this;
  out.components[axis] = -out.components[axis];
  return out;
}

std::string to_string(const Step& step) {
  std::string out = "(";
  for (std::size_t i = 0; i < step.dimension(); ++i) {
    if (i) out += ",";
    out += std::to_string(step[i]);
  }
  return out + ")";
}

Step parse_step(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') cleaned += c;
  }
  Step step;
  std::size_t start = 0;
  while (start <= cleaned.size()) {
    auto comma = cleaned.find(',', start);
    std::string part = cleaned.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      int value = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      step.components.push_back(value);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed step '" + std::string(text) + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return step;
}

StepSet::StepSet(std::size_t dimension, std::vector<Step> steps)
    : dimension_(dimension), steps_(std::move(steps)) {
  reflections_.resize(steps_.size() * dimension_);
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    for (std::size_t axis = 0; axis < dimension_; ++axis) {
      reflections_[i * dimension_ + axis] = *index_of(steps_[i].reflected(axis));
    }
  }
}

StepSet StepSet::validate(std::size_t dimension, std::span<const std::vector<int>> raw_steps) {
  std::vector<Violation> violations;
  if (dimension == 0) {
    throw Error(ErrorKind::DimensionMismatch, "dimension must be at least 1");
  }
  if (raw_steps.empty()) {
    violations.push_back({ErrorKind::EmptyStepSet, "step set is empty", {}, std::nullopt});
  }

  std::set<Step> unique;
  for (const auto& raw : raw_steps) {
    Step step{raw};
    if (raw.size() != dimension) {
      violations.push_back({ErrorKind::DimensionMismatch,
                            "step " + to_string(step) + " has dimension " +
                                std::to_string(raw.size()) + ", expected " + std::to_string(dimension),
                            raw, std::nullopt});
      continue;
    }
    bool in_range = true;
    for (std::size_t i = 0; i < dimension; ++i) {
      if (raw[i] < -1 || raw[i] > 1) {
        violations.push_back({ErrorKind::ComponentOutOfRange,
                              "step " + to_string(step) + " has component " + std::to_string(raw[i]) +
                                  " on axis " + std::to_string(i + 1),
                              raw, i});
        in_range = false;
      }
    }
    if (!in_range) continue;
    if (!unique.insert(step).second) {
      violations.push_back({ErrorKind::DuplicateStep, "step " + to_string(step) + " listed twice", raw,
                            std::nullopt});
    }
  }

  for (const auto& step : unique) {
    for (std::size_t axis = 0; axis < dimension; ++axis) {
      if (step[axis] != 0 && !unique.contains(step.reflected(axis))) {
        violations.push_back({ErrorKind::NotReflectable,
                              "reflection of " + to_string(step) + " across axis " +
                                  std::to_string(axis + 1) + " is missing",
                              step.components, axis});
      }
    }
  }

  if (!unique.empty()) {
    for (std::size_t axis = 0; axis < dimension; ++axis) {
      bool moves = std::any_of(unique.begin(), unique.end(),
                               [axis](const Step& s) { return s[axis] != 0; });
      if (!moves) {
        violations.push_back({ErrorKind::TrivialDimension,
                              "no step moves in dimension " + std::to_string(axis + 1), {}, axis});
      }
    }
  }

  if (!violations.empty()) throw Error(std::move(violations));
  return StepSet(dimension, std::vector<Step>(unique.begin(), unique.end()));
}

std::optional<std::size_t> StepSet::index_of(const Step& step) const {
  auto it = std::lower_bound(steps_.begin(), steps_.end(), step);
  if (it == steps_.end() || *it != step) return std::nullopt;
  return static_cast<std::size_t>(it - steps_.begin());
}

StepSet simple_step_set(std::size_t dimension) {
  std::vector<std::vector<int>> raw;
  for (std::size_t i = 0; i < dimension; ++i) {
    for (int sign : {1, -1}) {
      std::vector<int> v(dimension, 0);
      v[i] = sign;
      raw.push_back(v);
    }
  }
  return StepSet::validate(dimension, raw);
}

std::vector<int> drift(const StepSet& steps) {
  std::vector<int> total(steps.dimension(), 0);
  for (const auto& step : steps.steps()) {
    for (std::size_t i = 0; i < step.dimension(); ++i) total[i] += step[i];
  }
  return total;
}

}  // namespace orthant
