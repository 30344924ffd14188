#include "oracles.hpp"

#include <algorithm>
#include <vector>

namespace s4bell::testing {

int naive_classical_bound(const GroupTable& group, const OrbitSet& set) {
  constexpr int kAssignments = 6561;  // 3^8
  static const std::vector<std::array<int8_t, 8>> digits = [] {
    std::vector<std::array<int8_t, 8>> d(kAssignments);
    for (int code = 0; code < kAssignments; ++code) {
      int c = code;
      for (int i = 0; i < 8; ++i) {
        d[code][i] = static_cast<int8_t>(c % 3);
        c /= 3;
      }
    }
    return d;
  }();

  std::vector<std::array<int, GroupTable::kOrder>> maps;
  for (const auto& gt : set.gtildes()) maps.push_back(orbit_target_map(group, gt));

  int best = 0;
  for (int acode = 0; acode < kAssignments; ++acode) {
    const auto& a = digits[acode];
    // The demanded Bob (observable, letter) per orbit term under this a.
    int demand_obs[16], demand_letter[16], n = 0;
    for (const auto& map : maps)
      for (int alpha = 0; alpha < 8; ++alpha) {
        const int target = map[alpha * 3 + a[alpha]];
        demand_obs[n] = target / 3;
        demand_letter[n] = target % 3;
        ++n;
      }
    for (int bcode = 0; bcode < kAssignments; ++bcode) {
      const auto& b = digits[bcode];
      int count = 0;
      for (int d = 0; d < n; ++d) count += b[demand_obs[d]] == demand_letter[d];
      best = std::max(best, count);
    }
  }
  return best;
}

}  // namespace s4bell::testing
