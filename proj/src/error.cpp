#include "orthant/error.hpp"

namespace orthant {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ComponentOutOfRange: return "ComponentOutOfRange";
    case ErrorKind::NotReflectable: return "NotReflectable";
    case ErrorKind::TrivialDimension: return "TrivialDimension";
    case ErrorKind::DuplicateStep: return "DuplicateStep";
    case ErrorKind::EmptyStepSet: return "EmptyStepSet";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::WeightDomainMismatch: return "WeightDomainMismatch";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotFactorable: return "NotFactorable";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidModel: return "InvalidModel";
  }
  return "Unknown";
}

namespace {

std::string join_messages(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += std::string(error_name(v.kind)) + ": " + v.message;
  }
  return out;
}

}  // namespace

Error::Error(std::vector<Violation> violations)
    : std::runtime_error(join_messages(violations)), violations_(std::move(violations)) {
  if (violations_.empty()) {
    violations_.push_back({ErrorKind::InvalidModel, "unspecified error", {}, std::nullopt});
  }
}

Error::Error(ErrorKind kind, std::string message)
    : Error(std::vector<Violation>{{kind, std::move(message), {}, std::nullopt}}) {}

BudgetExceeded::BudgetExceeded(std::uint64_t required_bytes, std::uint64_t budget_bytes)
    : Error(ErrorKind::BudgetExceeded,
            "enumeration needs about " + std::to_string(required_bytes) +
                " bytes, budget is " + std::to_string(budget_bytes)),
      required_(required_bytes),
      budget_(budget_bytes) {}

}  // namespace orthant
