#include "s4bell/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace s4bell {

OrbitSet OrbitSet::of(std::vector<Permutation> gtildes) {
  if (gtildes.empty()) throw std::invalid_argument("orbit set must be nonempty");
  std::set<Permutation> seen(gtildes.begin(), gtildes.end());
  if (seen.size() != gtildes.size()) throw std::invalid_argument("duplicate orbit in set");
  return OrbitSet(std::move(gtildes));
}

OrbitSet OrbitSet::of_labels(const GroupTable& group, const std::vector<CosetCoord>& labels) {
  std::vector<Permutation> g;
  g.reserve(labels.size());
  for (CosetCoord c : labels) g.push_back(group.element(c));
  return of(std::move(g));
}

std::vector<CosetCoord> OrbitSet::labels(const GroupTable& group) const {
  std::vector<CosetCoord> out;
  out.reserve(gtildes_.size());
  for (const auto& g : gtildes_) out.push_back(group.coset_factorize(g));
  return out;
}

std::array<int, GroupTable::kOrder> orbit_target_map(const GroupTable& group,
                                                     const Permutation& gtilde) {
  std::array<int, GroupTable::kOrder> map{};
  for (int i = 0; i < GroupTable::kOrder; ++i) {
    const Permutation& gp = group.element(coord_from_flat(i));
    map[i] = flat_index(group.coset_factorize(compose(gp, gtilde)));
  }
  return map;
}

QuantumBound quantum_bound(const System& sys, const OrbitSet& set) {
  QuantumBound out;
  for (const auto& gt : set.gtildes()) {
    const IrrepSpectrum spec = sys.spectrum(gt);
    for (Irrep s : kIrreps) out.per_irrep_sums[static_cast<int>(s)] += spec[s];
  }
  constexpr std::array<Irrep, 4> priority{Irrep::D0, Irrep::D, Irrep::Dtilde, Irrep::D2};
  out.attained = priority[0];
  for (Irrep s : priority)
    if (out.per_irrep_sums[static_cast<int>(s)] > out.per_irrep_sums[static_cast<int>(out.attained)])
      out.attained = s;
  out.value = out.per_irrep_sums[static_cast<int>(out.attained)];
  return out;
}

int classical_bound(const GroupTable& group, const OrbitSet& set) {
  if (set.size() > 2) throw std::invalid_argument("classical bound supports 1 or 2 orbits");
  std::vector<std::array<int, GroupTable::kOrder>> maps;
  maps.reserve(set.size());
  for (const auto& gt : set.gtildes()) maps.push_back(orbit_target_map(group, gt));

  constexpr int kAssignments = 6561;  // 3^8
  int best = 0;
  std::array<int, 8> a{};
  for (int code = 0; code < kAssignments; ++code) {
    int counts[8][3] = {};
    for (const auto& map : maps) {
      for (int alpha = 0; alpha < 8; ++alpha) {
        const int target = map[alpha * 3 + a[alpha]];
        ++counts[target / 3][target % 3];
      }
    }
    int total = 0;
    for (auto& c : counts) total += std::max({c[0], c[1], c[2]});
    best = std::max(best, total);

    for (int d = 0; d < 8; ++d) {  // next base-3 assignment
      if (++a[d] < 3) break;
      a[d] = 0;
    }
  }
  return best;
}

double sum_probabilities(const System& sys, const Vector9& w, const OrbitSet& set) {
  if (std::abs(w.norm() - 1.0) >= 1e-9) throw std::invalid_argument("state vector must be unit norm");
  double s = 0.0;
  for (const auto& gt : set.gtildes()) {
    const auto map = orbit_target_map(sys.group, gt);
    for (int i = 0; i < GroupTable::kOrder; ++i) {
      const Vector9 term =
          tensor(sys.orbit.vector(coord_from_flat(i)), sys.orbit.vector(coord_from_flat(map[i])));
      const double amp = term.dot(w);
      s += amp * amp;
    }
  }
  return s;
}

BoundReport make_bound_report(const System& sys, const OrbitSet& set) {
  BoundReport r;
  r.gtildes = set.gtildes();
  r.labels = set.labels(sys.group);
  const QuantumBound q = quantum_bound(sys, set);
  r.per_irrep_sums = q.per_irrep_sums;
  r.quantum_bound = q.value;
  r.quantum_arg = q.attained;
  r.classical_bound = classical_bound(sys.group, set);
  if (set.size() == 2)
    r.cycle_lower_bound = cycle_lower_bound(sys.group, set.gtildes()[0], set.gtildes()[1]);
  r.violation = r.quantum_bound > r.classical_bound + 1e-9;
  r.violation_ratio = (r.quantum_bound - r.classical_bound) / r.classical_bound;
  return r;
}

}  // namespace s4bell
