#pragma once

#include <optional>
#include <vector>

#include "s4bell/system.hpp"

namespace s4bell {

/// A set of orbits O(gtilde, v), one per distinct group element.
class OrbitSet {
 public:
  /// Validates: nonempty, pairwise distinct. Throws std::invalid_argument.
  static OrbitSet of(std::vector<Permutation> gtildes);
  static OrbitSet of_labels(const GroupTable& group, const std::vector<CosetCoord>& labels);

  const std::vector<Permutation>& gtildes() const { return gtildes_; }
  int size() const { return static_cast<int>(gtildes_.size()); }
  std::vector<CosetCoord> labels(const GroupTable& group) const;

 private:
  explicit OrbitSet(std::vector<Permutation> g) : gtildes_(std::move(g)) {}
  std::vector<Permutation> gtildes_;
};

/// For one orbit: flat (alpha, l) of g' -> flat coordinates of g' * gtilde,
/// i.e. the Bob label paired with each Alice label.
std::array<int, GroupTable::kOrder> orbit_target_map(const GroupTable& group,
                                                     const Permutation& gtilde);

struct QuantumBound {
  double value = 0.0;
  Irrep attained = Irrep::D0;
  std::array<double, 4> per_irrep_sums{};  // Irrep enum order
};

/// Sum of x_s over the set's orbits per irrep; the bound is the maximum
/// (the X operators commute, so eigenvalues add blockwise).
QuantumBound quantum_bound(const System& sys, const OrbitSet& set);

/// Exact classical (Bell) bound for one or two orbits: the maximum number of
/// orbit terms satisfied by a deterministic assignment of letters to all
/// Alice and Bob observables. Enumerates the 3^8 Alice assignments; for each,
/// the optimal Bob letters are chosen per observable, which is exact because
/// each term constrains a single Bob observable. Throws for sets of size > 2.
int classical_bound(const GroupTable& group, const OrbitSet& set);

/// S = sum of |<v_{alpha,l} (x) v_{(alpha,l)_gtilde}, w>|^2 over all terms of
/// all orbits in the set. Requires ||w|| = 1 within 1e-9.
double sum_probabilities(const System& sys, const Vector9& w, const OrbitSet& set);

struct CycleVertex {
  int orbit = 1;  // 1 or 2
  CosetCoord alice;
  CosetCoord bob;
  friend bool operator==(const CycleVertex&, const CycleVertex&) = default;
};

/// Partition of the 48 elements of two orbits into alternating cycles.
/// Consecutive vertices alternate orbit 1 / orbit 2 and share the Bob and
/// Alice coordinate alternately; every cycle has length 2 * order(g1 * g2^-1).
struct CycleDecomposition {
  std::vector<std::vector<CycleVertex>> cycles;
  int cycle_length = 0;
};

/// Builds the decomposition, starting each new cycle at the smallest unused
/// (alpha, l) Alice coordinate. Throws if g1 == g2.
CycleDecomposition cycle_decomposition(const GroupTable& group, const Permutation& g1,
                                       const Permutation& g2);

/// Lower bound B' on the classical bound from the cycle decomposition:
/// exhaustively selects, per cycle, a contiguous arc of vertices (possibly
/// empty or the whole cycle) such that the union fixes at most one letter per
/// Alice and per Bob observable, and maximizes the total number of selected
/// vertices. Any such selection is realized by a deterministic assignment,
/// so B' <= classical_bound always.
int cycle_lower_bound(const GroupTable& group, const Permutation& g1, const Permutation& g2);

struct BoundReport {
  std::vector<Permutation> gtildes;
  std::vector<CosetCoord> labels;
  std::array<double, 4> per_irrep_sums{};
  double quantum_bound = 0.0;
  Irrep quantum_arg = Irrep::D0;
  int classical_bound = 0;
  std::optional<int> cycle_lower_bound;  // pairs only
  bool violation = false;
  double violation_ratio = 0.0;
};

BoundReport make_bound_report(const System& sys, const OrbitSet& set);

// --- CHSH baseline -------------------------------------------------------

/// Classical CHSH bound by enumerating the 16 deterministic sign assignments
/// of |<A0 B0> + <A0 B1> + <A1 B0> - <A1 B1>|. Also self-checks, on 100
/// seeded random joint distributions, that the expression equals twice the
/// difference of the two complementary configuration sums. Returns 2.
double chsh_classical_bound();

/// Max discrepancy of that joint-distribution identity over `samples` random
/// distributions (exposed so the self-check is testable on its own).
double chsh_joint_identity_max_error(int samples, unsigned seed);

/// |E(a0,b0) + E(a0,b1) + E(a1,b0) - E(a1,b1)| for the singlet correlation
/// E(x, y) = -cos(x - y); angles in radians.
double chsh_quantum_value(double a0, double a1, double b0, double b1);

/// Maximum of chsh_quantum_value over the uniform grid with `steps` angles
/// per party in [0, 2*pi). Exact over the grid (separable in a0 and a1).
double chsh_grid_max(int steps);

}  // namespace s4bell
