#pragma once

#include <string>
#include <vector>

#include "kottler/report.hpp"

namespace kottler {

struct SuiteOptions {
  /// Multiplies every "must stay below" tolerance. Detection thresholds and
  /// convergence-rate floors are not scaled.
  double tolerance_scale = 1.0;
  /// Family names to run; empty runs everything.
  std::vector<std::string> only;
  unsigned threads = 1;
};

struct CriterionResult {
  int id = 0;
  std::string family;
  std::string title;
  bool passed = false;
  std::vector<VerificationReport> reports;
  double seconds = 0.0;
  /// Set when the producer threw; the criterion then fails.
  std::string error;
};

struct CriterionInfo {
  int id;
  std::string family;
  std::string title;
};

/// The registered acceptance criteria in id order.
const std::vector<CriterionInfo>& criteria();

/// Throws DomainError for an unknown family name in `only`.
std::vector<CriterionResult> run_suite(const SuiteOptions& options = {});

/// Runs a single criterion by id.
CriterionResult run_criterion(int id, double tolerance_scale = 1.0);

nlohmann::json to_json(const CriterionResult& result);

}  // namespace kottler
