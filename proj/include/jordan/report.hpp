#pragma once

#include <string>
#include <vector>

namespace jordan {

struct Check {
  std::string name;
  bool pass = false;
  double residual = 0.0;
};

struct VerificationReport {
  std::vector<Check> checks;

  void add(std::string name, bool pass, double residual = 0.0) {
    checks.push_back({std::move(name), pass, residual});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace jordan
