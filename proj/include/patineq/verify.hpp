#pragma once

/// @file verify.hpp
/// @brief Named verification suites: every closed form checked against its
/// independent route at desk-scale bounds.

#include "patineq/config.hpp"

#include <string>
#include <vector>

namespace patineq {

enum class VerifyLevel { desk, extended };
VerifyLevel parse_verify_level(const std::string& name);
std::string to_string(VerifyLevel level);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteInfo {
  std::string name;
  std::string description;
};

/// Suites in the order `run_all_suites` runs them.
const std::vector<SuiteInfo>& verify_suites();

/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& name, VerifyLevel level,
                                   const Budgets& budgets = {});
std::vector<CheckResult> run_all_suites(VerifyLevel level, const Budgets& budgets = {});

}  // namespace patineq
