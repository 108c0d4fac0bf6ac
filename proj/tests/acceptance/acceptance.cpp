#include <cstdio>
#include <cstring>
#include <string>
#include <thread>

#include "kottler/suite.hpp"

// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Failing criteria also list their failing reports.
int main(int argc, char** argv) {
  kottler::SuiteOptions options;
  options.threads = std::max(1u, std::thread::hardware_concurrency());
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "-v") == 0) verbose = true;
  }

  const auto results = kottler::run_suite(options);
  int failures = 0;
  for (const auto& c : results) {
    std::printf("%s criterion %2d [%s] %s (%zu checks, %.2fs)\n", c.passed ? "PASS" : "FAIL", c.id,
                c.family.c_str(), c.title.c_str(), c.reports.size(), c.seconds);
    if (!c.error.empty()) std::printf("    error: %s\n", c.error.c_str());
    for (const auto& r : c.reports) {
      if (verbose || !r.passed) {
        std::printf("    %s %-60s residual=%.3e tolerance=%.3e\n", r.passed ? "ok  " : "FAIL",
                    r.name.c_str(), r.residual, r.tolerance);
      }
    }
    if (!c.passed) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}
