#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace kyoung::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

inline constexpr int kMaxParameter = 20;

struct RunConfig {
  int k = 1;
  int m = 1;
  std::string format;  // dot | json | table
  std::string output;  // "-" for stdout; relative paths honour KYOUNG_OUTPUT_DIR
  std::size_t node_cap = 1'000'000;
  std::vector<std::string> suites;  // empty selects every suite
  bool core_labels = false;
};

/// Names accepted by --suite.
const std::vector<std::string>& suite_names();

struct VerificationResult {
  nlohmann::json report;
  bool passed = false;
};

/// Runs the selected suites against a freshly built Y^k_m.
VerificationResult run_verification(const RunConfig& config);

int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
/// direction is "bounded" (core -> k-bounded) or "core" (k-bounded -> core).
int cmd_convert(int k, const std::string& partition, const std::string& direction, bool verbose, std::ostream& out,
                std::ostream& err);
int cmd_rotate(int k, int m, int power, const std::string& partition, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kyoung::cli
