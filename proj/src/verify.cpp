#include "qhall/verify.hpp"

namespace qhall {

std::vector<std::string> verify_suite_names() { return {}; }

CheckResult run_verify_suite(const std::string& name, const SuiteOptions&) {
  return {name, false, "unknown suite", 0};
}

std::vector<CheckResult> run_all_suites(const SuiteOptions&) { return {}; }

}  // namespace qhall
