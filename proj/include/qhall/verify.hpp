/*
  verify.hpp

  The verification suite: each check runs a mathematically independent
  computation at desk scale and reports pass/fail with a detail line.
  The command-line tool and the acceptance binary both drive these.
*/

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qhall {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  bool enable_g2_braid = false;
};

std::vector<std::string> verify_suite_names();
CheckResult run_verify_suite(const std::string& name, const SuiteOptions& opt = {});
std::vector<CheckResult> run_all_suites(const SuiteOptions& opt = {});

}  // namespace qhall
