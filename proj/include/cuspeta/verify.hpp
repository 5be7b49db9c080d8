#pragma once

#include <string>
#include <vector>

namespace cuspeta {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the self-verification suite: closed forms against brute-force
/// oracles, exact identities, and pipeline consistency. An empty filter runs
/// everything; otherwise only checks whose name contains the filter.
std::vector<CheckResult> runVerification(const std::string &filter = "");

} // namespace cuspeta
