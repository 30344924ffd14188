#include <algorithm>
#include <stdexcept>

#include "s4bell/bounds.hpp"

namespace s4bell {

CycleDecomposition cycle_decomposition(const GroupTable& group, const Permutation& g1,
                                       const Permutation& g2) {
  if (g1 == g2) throw std::invalid_argument("cycle decomposition needs two distinct orbits");
  const Permutation rho = compose(g1, inverse(g2));
  const int n = order(rho);

  CycleDecomposition out;
  out.cycle_length = 2 * n;
  std::array<bool, GroupTable::kOrder> used{};
  for (int start = 0; start < GroupTable::kOrder; ++start) {
    if (used[start]) continue;
    std::vector<CycleVertex> cycle;
    cycle.reserve(2 * n);
    Permutation cur = group.element(coord_from_flat(start));
    for (int k = 0; k < n; ++k) {
      used[flat_index(group.coset_factorize(cur))] = true;
      const CosetCoord bob = group.coset_factorize(compose(cur, g1));
      const Permutation next = compose(cur, rho);
      cycle.push_back({1, group.coset_factorize(cur), bob});
      cycle.push_back({2, group.coset_factorize(next), bob});
      cur = next;
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

namespace {

/// Letters fixed so far: -1 = free, else the fixed letter per observable.
struct LetterState {
  std::array<int, 8> alice;
  std::array<int, 8> bob;
};

bool try_extend(const std::vector<CycleVertex>& arc, LetterState& st) {
  for (const CycleVertex& v : arc) {
    int& a = st.alice[v.alice.alpha - 1];
    if (a >= 0 && a != v.alice.l) return false;
    a = v.alice.l;
    int& b = st.bob[v.bob.alpha - 1];
    if (b >= 0 && b != v.bob.l) return false;
    b = v.bob.l;
  }
  return true;
}

/// All contiguous arcs of a cycle: empty, every run of 1..len-1 vertices
/// starting anywhere, and the whole cycle. Largest first for pruning.
std::vector<std::vector<CycleVertex>> arcs_of(const std::vector<CycleVertex>& cycle) {
  const int len = static_cast<int>(cycle.size());
  std::vector<std::vector<CycleVertex>> arcs;
  arcs.push_back(cycle);
  for (int size = len - 1; size >= 1; --size)
    for (int start = 0; start < len; ++start) {
      std::vector<CycleVertex> arc(size);
      for (int k = 0; k < size; ++k) arc[k] = cycle[(start + k) % len];
      arcs.push_back(std::move(arc));
    }
  arcs.emplace_back();
  return arcs;
}

void search(const std::vector<std::vector<std::vector<CycleVertex>>>& options,
            const std::vector<int>& suffix_max, std::size_t i, const LetterState& st, int acc,
            int& best) {
  if (acc + suffix_max[i] <= best) return;
  if (i == options.size()) {
    best = std::max(best, acc);
    return;
  }
  for (const auto& arc : options[i]) {
    LetterState next = st;
    if (!try_extend(arc, next))
      continue;
    search(options, suffix_max, i + 1, next, acc + static_cast<int>(arc.size()), best);
  }
}

}  // namespace

int cycle_lower_bound(const GroupTable& group, const Permutation& g1, const Permutation& g2) {
  const CycleDecomposition dec = cycle_decomposition(group, g1, g2);
  std::vector<std::vector<std::vector<CycleVertex>>> options;
  options.reserve(dec.cycles.size());
  for (const auto& cycle : dec.cycles) options.push_back(arcs_of(cycle));

  LetterState st;
  st.alice.fill(-1);
  st.bob.fill(-1);

  // Per-cycle cap: the largest arc that is consistent on its own. Suffix
  // sums of the caps bound what the remaining cycles can still contribute.
  const std::size_t n = options.size();
  std::vector<int> suffix_max(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    int cap = 0;
    for (const auto& arc : options[i]) {
      LetterState fresh = st;
      if (try_extend(arc, fresh)) {
        cap = static_cast<int>(arc.size());
        break;  // arcs are ordered largest first
      }
    }
    suffix_max[i] = suffix_max[i + 1] + cap;
  }

  // Greedy warm start (largest feasible arc per cycle) to tighten pruning.
  int best = 0;
  {
    LetterState greedy = st;
    for (const auto& arcs : options)
      for (const auto& arc : arcs) {
        LetterState next = greedy;
        if (try_extend(arc, next)) {
          greedy = next;
          best += static_cast<int>(arc.size());
          break;
        }
      }
  }

  search(options, suffix_max, 0, st, 0, best);
  return best;
}

}  // namespace s4bell
