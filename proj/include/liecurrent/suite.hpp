#pragma once

#include "liecurrent/report.hpp"

namespace liecurrent {

struct SuiteResult {
  std::vector<CheckEntry> checks;
  std::vector<std::string> notes;
  Window safe_window;
  bool pass = false;
};

/// The full verification suite of one case: the Manin triple verdicts,
/// CYBE, skewness, cocycle identity (degrees <= 3), the cobracket degree
/// bound (n <= 4), and for the A cases the dual-basis comparison.
SuiteResult run_case_suite(const CaseTag& tag, const LieAlgebraData& g,
                           const Window& win, int depth);

/// report_v1 JSON for the suite.
Json suite_report_json(const CaseTag& tag, const LieAlgebraData& g,
                       const Window& win, int depth, const SuiteResult& res);

}  // namespace liecurrent
