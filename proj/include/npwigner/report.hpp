#pragma once

#include <string>
#include <vector>

namespace npw {

struct Check {
  std::string name;
  double deviation = 0.0;
  double threshold = 0.0;
  bool passed = false;
  // Informational checks are recorded but never fail a report.
  bool gating = true;
  std::string note;
};

struct ValidationReport {
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (c.gating && !c.passed) return false;
    }
    return true;
  }

  // Records `deviation` against `threshold`; passes when deviation < threshold (NaN fails).
  Check& add(std::string name, double deviation, double threshold, bool gating = true,
             std::string note = {}) {
    checks.push_back({std::move(name), deviation, threshold, deviation < threshold, gating,
                      std::move(note)});
    return checks.back();
  }
};

}  // namespace npw
