#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diagzeta/count.hpp"

namespace diagzeta::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const noexcept;
  std::size_t failures() const noexcept;
};

// One suite per acceptance criterion. Everything is exact integer/rational
// equality; the only tunable is the brute-force work budget.
SuiteResult lemma1_oracle_agreement(std::uint64_t budget = count::kDefaultBudget);
SuiteResult lemma2_oracle_agreement(std::uint64_t budget = count::kDefaultBudget);
SuiteResult series_consistency_suite();
SuiteResult weil_property_suite();
SuiteResult class_number_suite();
SuiteResult power_sum_suite();
SuiteResult extremality_census_suite();
SuiteResult hermitian_recognition_suite();
SuiteResult classifier_suite();
SuiteResult golden_determinism_suite();

/// Suites for one cmd_verify selector: lemma1, lemma2, series, weil,
/// classnum run their single suite; all runs every criterion. Throws
/// ParseError for unknown names.
std::vector<SuiteResult> run_suites(const std::string& selector,
                                    std::uint64_t budget = count::kDefaultBudget);

}  // namespace diagzeta::verify
