#pragma once

// The acceptance battery: twelve desk-scale checks, each a finite instance
// of a structural property, reported as pass/fail with counts.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "central/report.hpp"

namespace central {

struct SuiteConfig {
  std::uint64_t seed = 20240917;
  unsigned jobs = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::string detail;
};

/// Criteria 1..11, in id order. Runs up to `jobs` criteria concurrently;
/// the result order and content do not depend on `jobs`.
std::vector<CriterionResult> run_criteria(const SuiteConfig& config);

/// Criterion 12: runs 1..11 twice and compares the structured dumps.
CriterionResult run_determinism(const SuiteConfig& config);

/// All twelve.
std::vector<CriterionResult> run_acceptance(const SuiteConfig& config);

Json to_json(const CriterionResult& r);
Json to_json(const std::vector<CriterionResult>& results);

/// "[PASS] 1 name: detail" lines.
std::string pass_fail_lines(const std::vector<CriterionResult>& results);

}  // namespace central
