#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orthant {

enum class ErrorKind {
  ComponentOutOfRange,
  NotReflectable,
  TrivialDimension,
  DuplicateStep,
  EmptyStepSet,
  DimensionMismatch,
  ZeroCoordinate,
  NonPositiveWeight,
  WeightDomainMismatch,
  NotCentral,
  NotSymmetric,
  NotFactorable,
  DomainError,
  BudgetExceeded,
  InvalidModel,
};

std::string_view error_name(ErrorKind kind);

/// One concrete problem with a model. Axes are 0-based here and reported
/// 1-based in messages and JSON.
struct Violation {
  ErrorKind kind;
  std::string message;
  std::vector<int> step;
  std::optional<std::size_t> axis;
};

class Error : public std::runtime_error {
 public:
  explicit Error(std::vector<Violation> violations);
  Error(ErrorKind kind, std::string message);

  ErrorKind kind() const { return violations_.front().kind; }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required_bytes, std::uint64_t budget_bytes);

  std::uint64_t required_bytes() const { return required_; }
  std::uint64_t budget_bytes() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace orthant
