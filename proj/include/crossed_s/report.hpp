#pragma once

#include <string>
#include <vector>

namespace crossed_s {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;  // offending entry on failure, or a short summary
  bool gating = true;  // informational checks do not affect ok()
};

/// Ordered list of named pass/fail checks.
struct Report {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, bool passed, std::string detail = "") {
    checks.push_back({std::move(name), passed, std::move(detail), true});
  }
  void info(std::string name, bool passed, std::string detail = "") {
    checks.push_back({std::move(name), passed, std::move(detail), false});
  }
  void merge(const Report& other, const std::string& prefix = "") {
    for (const Check& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail, c.gating});
  }
  bool ok() const {
    for (const Check& c : checks)
      if (c.gating && !c.passed) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const Check& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace crossed_s
