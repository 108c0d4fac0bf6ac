#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace kottler {

/// How `residual` is compared with `tolerance`.
enum class Orientation {
  equality,  // |residual| <= tolerance
  at_least,  // residual >= -tolerance (residual is a margin)
  at_most,   // residual <= tolerance
};

struct VerificationReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  Orientation orientation = Orientation::equality;
  /// Provenance of the inputs: masses, genus, grid sizes.
  nlohmann::json inputs_digest = nlohmann::json::object();
  /// Check-specific extras (locations, flags, sequences).
  nlohmann::json details = nlohmann::json::object();

  /// Sets `passed` from residual, tolerance and orientation. Non-finite
  /// residuals never pass.
  void decide();
};

/// Finite doubles as numbers; nan and +-inf as the strings "nan", "inf", "-inf".
nlohmann::json json_number(double value);

/// {name, lhs, rhs, residual, tolerance, passed, orientation, finite,
///  inputs_digest, details}; `finite` is false if any numeric field was
/// encoded as a string.
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const std::vector<VerificationReport>& reports);

std::string to_string(Orientation orientation);

}  // namespace kottler
