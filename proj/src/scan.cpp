#include "s4bell/scan.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace s4bell {

ScanReport scan_all(const System& sys, int num_threads) {
  if (num_threads < 1) throw std::invalid_argument("need at least one worker");

  std::vector<std::vector<CosetCoord>> tasks;
  tasks.reserve(24 + 276);
  for (int i = 0; i < GroupTable::kOrder; ++i) tasks.push_back({coord_from_flat(i)});
  for (int i = 0; i < GroupTable::kOrder; ++i)
    for (int j = i + 1; j < GroupTable::kOrder; ++j)
      tasks.push_back({coord_from_flat(i), coord_from_flat(j)});

  std::vector<BoundReport> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();)
      results[t] = make_bound_report(sys, OrbitSet::of_labels(sys.group, tasks[t]));
  };
  if (num_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(num_threads);
    for (int i = 0; i < num_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ScanReport report;
  report.singles.assign(results.begin(), results.begin() + GroupTable::kOrder);
  report.pairs.assign(results.begin() + GroupTable::kOrder, results.end());
  for (const auto& r : report.pairs) {
    ++report.b_histogram[r.classical_bound];
    if (r.violation) report.violations.emplace_back(r.labels[0], r.labels[1]);
  }
  for (const auto& r : report.singles)
    if (r.violation) report.violations.emplace_back(r.labels[0], r.labels[0]);
  return report;
}

std::vector<ReferenceBoundCheck> check_reference_bounds(const ScanReport& report) {
  std::vector<ReferenceBoundCheck> out;
  for (const ReferenceBoundPair& ref : reference_pair_bounds()) {
    CosetCoord lo = ref.a, hi = ref.b;
    if (hi < lo) std::swap(lo, hi);
    const auto it = std::find_if(report.pairs.begin(), report.pairs.end(), [&](const BoundReport& r) {
      return r.labels[0] == lo && r.labels[1] == hi;
    });
    if (it == report.pairs.end()) throw std::logic_error("reference pair missing from scan");
    out.push_back({ref.a, ref.b, ref.bound, it->classical_bound, it->classical_bound == ref.bound});
  }
  return out;
}

}  // namespace s4bell
