#include "isgd/report.hpp"

#include <algorithm>
#include <ostream>

#include "isgd/errors.hpp"

namespace isgd {

void ValidationReport::merge(const ValidationReport& other) {
  violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

bool ValidationReport::has_axiom(const std::string& tag) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [&](const Violation& v) { return v.axiom == tag; });
}

std::ostream& operator<<(std::ostream& os, const ValidationReport& report) {
  if (report.ok()) {
    os << "ok\n";
  } else {
    os << report.violations().size() << " violation(s)\n";
    for (const auto& v : report.violations()) os << "  [" << v.axiom << "] " << v.message << '\n';
  }
  for (const auto& n : report.notes()) os << "  note: " << n << '\n';
  return os;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

ValidationError::ValidationError(const std::string& what, ValidationReport report)
    : std::runtime_error(what), report_(std::move(report)) {}

namespace {
std::string join_uncovered(const std::vector<std::string>& names) {
  std::string out = "points outside every idempotent domain:";
  for (const auto& n : names) out += " " + n;
  return out;
}
}  // namespace

CoverageError::CoverageError(std::vector<std::string> uncovered)
    : std::runtime_error(join_uncovered(uncovered)), uncovered_(std::move(uncovered)) {}

}  // namespace isgd
