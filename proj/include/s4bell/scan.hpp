#pragma once

#include <map>
#include <utility>
#include <vector>

#include "s4bell/bounds.hpp"
#include "s4bell/reference.hpp"

namespace s4bell {

/// Census of all 24 single orbits and all 276 unordered pairs of distinct
/// orbits. Ordering is deterministic: singles by (alpha, l); pairs
/// lexicographic in the label pair.
struct ScanReport {
  std::vector<BoundReport> singles;  // 24
  std::vector<BoundReport> pairs;    // 276
  std::map<int, int> b_histogram;    // classical bound -> pair count
  std::vector<std::pair<CosetCoord, CosetCoord>> violations;
};

/// Runs the full census. Work may be split across `num_threads` workers;
/// the result is identical for every worker count.
ScanReport scan_all(const System& sys, int num_threads = 1);

/// Comparison of the scan's classical bounds against the bundled reference
/// pair list; mismatches are reported with both values.
struct ReferenceBoundCheck {
  CosetCoord a;
  CosetCoord b;
  int stated;
  int computed;
  bool match;
};

std::vector<ReferenceBoundCheck> check_reference_bounds(const ScanReport& report);

}  // namespace s4bell
