#include "kottler/report.hpp"

#include <cmath>

namespace kottler {

void VerificationReport::decide() {
  if (!std::isfinite(residual)) {
    passed = false;
    return;
  }
  switch (orientation) {
    case Orientation::equality:
      passed = std::abs(residual) <= tolerance;
      break;
    case Orientation::at_least:
      passed = residual >= -tolerance;
      break;
    case Orientation::at_most:
      passed = residual <= tolerance;
      break;
  }
}

nlohmann::json json_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

std::string to_string(Orientation orientation) {
  switch (orientation) {
    case Orientation::equality:
      return "equality";
    case Orientation::at_least:
      return "at_least";
    case Orientation::at_most:
      return "at_most";
  }
  return "equality";
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["name"] = report.name;
  j["lhs"] = json_number(report.lhs);
  j["rhs"] = json_number(report.rhs);
  j["residual"] = json_number(report.residual);
  j["tolerance"] = json_number(report.tolerance);
  j["passed"] = report.passed;
  j["orientation"] = to_string(report.orientation);
  j["finite"] = std::isfinite(report.lhs) && std::isfinite(report.rhs) &&
                std::isfinite(report.residual) && std::isfinite(report.tolerance);
  j["inputs_digest"] = report.inputs_digest;
  j["details"] = report.details;
  return j;
}

nlohmann::json to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  return list;
}

}  // namespace kottler
