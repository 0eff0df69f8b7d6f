#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "formulas/checks.hpp"

namespace qcross {

/// "theorems", "bijections", "decomposition", "series", "inverse",
/// "orthogonality", "appendixC" and "all".
const std::vector<std::string>& verify_suite_names();
bool is_verify_suite(std::string_view name);

struct VerifyCase {
  std::string suite;
  std::string name;
  std::function<CheckResult()> run;
};

/// The cases of `suite` with every size bounded by max_n (and by each
/// check's own guard). Throws InvalidArgument for an unknown suite.
std::vector<VerifyCase> verify_cases(std::string_view suite, int max_n);

enum class CaseStatus { Pass, Fail };

struct CaseOutcome {
  std::string suite;
  std::string name;
  CaseStatus status = CaseStatus::Pass;
  std::string detail;
  double seconds = 0;
};

struct VerifyReport {
  std::string suite;
  int max_n = 0;
  std::size_t total_cases = 0;  // cases in the suite, including unrun ones
  std::vector<CaseOutcome> outcomes;  // in case order, ending at the first failure
  double seconds = 0;

  bool ok() const;
  std::size_t passed() const;
  std::size_t failed() const;
  /// One line per outcome plus a summary line.
  std::string to_text(bool timings) const;
  /// Timings are left out unless requested, so reports compare byte for byte.
  std::string to_json(bool timings) const;
};

/// Runs the cases on `jobs` worker threads. Outcomes are reported in case
/// order and stop at the first failing case, whatever the scheduling.
VerifyReport run_verify(std::string_view suite, int max_n, unsigned jobs);
VerifyReport run_cases(std::string_view suite, int max_n, const std::vector<VerifyCase>& cases, unsigned jobs);

}  // namespace qcross
