#pragma once

#include <string>
#include <vector>

namespace ellipsoid::verification {

// Result of one acceptance criterion. For criteria with a single tolerance,
// `measured` is the worst observed deviation in that tolerance's units; for
// multi-part criteria, `measured` is the worst deviation expressed as a
// fraction of its own sub-tolerance and `tolerance` is 1.
struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

// Runs the acceptance suite. full = all ten criteria; otherwise the quick
// subset {1, 2, 6, 10}. threads caps the enumeration parallelism
// (<= 0: library default).
std::vector<CheckResult> run_acceptance(bool full, int threads);

}  // namespace ellipsoid::verification
