#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace comlie {

/// Outcome of one verification check. A failing check is an outcome, not an
/// exception; first_mismatch is the first offending degree when one exists.
struct CheckReport {
  std::string name;
  bool passed = false;
  int first_mismatch = -1;
  std::string detail;
};

inline nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j = {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
  j["first_mismatch"] = r.first_mismatch >= 0 ? nlohmann::json(r.first_mismatch) : nlohmann::json(nullptr);
  return j;
}

inline bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

}  // namespace comlie
