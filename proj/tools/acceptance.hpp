#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace nara {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  bool extended = false;   // longer sweeps and prefixes
  std::set<int> only;      // empty: all criteria
  std::ostream* log = nullptr;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// "PASS 3 title (1.2s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace nara
