#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "isgd/report.hpp"

namespace isgd {

/// A table refers to objects or arrows it never declared.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text could not be read; carries a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A value failed an axiom check where a valid value was required.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A restriction left carrier points outside every idempotent domain.
class CoverageError : public std::runtime_error {
 public:
  explicit CoverageError(std::vector<std::string> uncovered);
  const std::vector<std::string>& uncovered() const { return uncovered_; }

 private:
  std::vector<std::string> uncovered_;
};

/// Two representatives of one class disagreed under a map that must factor
/// through the quotient.
class WellDefinednessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace isgd
