#pragma once

// Cross-checks of every exact quantity on one point set.

#include <string>
#include <vector>

#include "rcn/geometry.hpp"

namespace rcn {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the census, crossing and bound checks. The brute-force parts are
/// O(n^4) in time; intended for n up to a few hundred.
std::vector<CheckResult> verify_point_set(const PointSet& set);

bool all_passed(const std::vector<CheckResult>& results) noexcept;

}  // namespace rcn
