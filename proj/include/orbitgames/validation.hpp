#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace orbitgames {

/// One violated invariant, with the tuple that witnesses it.
struct Violation {
  std::string kind;     // e.g. "associativity", "homeomorphism"
  std::string detail;   // human-readable description
  std::vector<int> witness;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string kind, std::string detail, std::vector<int> witness) {
    violations.push_back({std::move(kind), std::move(detail), std::move(witness)});
  }
  void append(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
  bool has(const std::string& kind) const {
    for (const auto& v : violations)
      if (v.kind == kind) return true;
    return false;
  }
  std::string summary() const;
};

/// Raised when an operation requires a valid instance and gets an invalid one.
class InvalidInstance : public std::invalid_argument {
public:
  explicit InvalidInstance(ValidationReport report)
      : std::invalid_argument("invalid instance: " + report.summary()), report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

private:
  ValidationReport report_;
};

}  // namespace orbitgames
