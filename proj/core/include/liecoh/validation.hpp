#pragma once

#include <string>
#include <vector>

#include "liecoh/error.hpp"

namespace liecoh {

struct ValidationIssue {
  std::string check;    // stable invariant name, e.g. "jacobi"
  std::string message;  // human readable detail
  std::vector<std::size_t> witness;  // basis indices exhibiting the failure
};

struct ValidationReport {
  std::vector<ValidationIssue> failures;
  std::vector<ValidationIssue> warnings;

  bool ok() const { return failures.empty(); }
  bool failed(const std::string& check) const;
  void fail(std::string check, std::string message, std::vector<std::size_t> witness = {});
  void warn(std::string check, std::string message, std::vector<std::size_t> witness = {});
  void merge(const ValidationReport& other);
  std::string summary() const;
};

/// Thrown when an operation requiring validated input receives input that
/// fails validation. Carries the full report.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace liecoh
