#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "isgd/ids.hpp"

namespace isgd {

struct Violation {
  std::string axiom;     // short tag, e.g. "P3" or "associativity"
  std::string message;   // human-readable, with names already substituted
  std::vector<ArrowId> arrows;
  std::vector<ElementId> points;
};

/// Outcome of a validator. ok() is true iff no violation was recorded.
class ValidationReport {
 public:
  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  const std::vector<std::string>& notes() const { return notes_; }

  void add(Violation v) { violations_.push_back(std::move(v)); }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void merge(const ValidationReport& other);

  bool has_axiom(const std::string& tag) const;

 private:
  std::vector<Violation> violations_;
  std::vector<std::string> notes_;
};

std::ostream& operator<<(std::ostream& os, const ValidationReport& report);

}  // namespace isgd
