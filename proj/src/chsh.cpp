#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "s4bell/bounds.hpp"

namespace s4bell {

namespace {

/// a0*b0 + a0*b1 + a1*b0 - a1*b1 for one sign configuration; always +-2.
int config_weight(int a0, int a1, int b0, int b1) {
  return a0 * b0 + a0 * b1 + a1 * b0 - a1 * b1;
}

}  // namespace

double chsh_joint_identity_max_error(int samples, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  constexpr int kSigns[2] = {+1, -1};
  double worst = 0.0;
  for (int n = 0; n < samples; ++n) {
    std::array<double, 16> p{};
    double norm = 0.0;
    for (double& x : p) norm += (x = uni(rng));
    for (double& x : p) x /= norm;

    // Left side from the four correlation marginals.
    double lhs = 0.0;
    for (int alpha = 0; alpha < 2; ++alpha)
      for (int beta = 0; beta < 2; ++beta) {
        double e = 0.0;
        int idx = 0;
        for (int a0 : kSigns)
          for (int a1 : kSigns)
            for (int b0 : kSigns)
              for (int b1 : kSigns) {
                const int a = alpha == 0 ? a0 : a1;
                const int b = beta == 0 ? b0 : b1;
                e += a * b * p[idx++];
              }
        lhs += (alpha == 1 && beta == 1) ? -e : e;
      }

    // Right side: twice the difference of the two complementary sums.
    double plus = 0.0, minus = 0.0;
    int idx = 0;
    for (int a0 : kSigns)
      for (int a1 : kSigns)
        for (int b0 : kSigns)
          for (int b1 : kSigns) {
            (config_weight(a0, a1, b0, b1) > 0 ? plus : minus) += p[idx++];
          }
    worst = std::max(worst, std::abs(lhs - 2.0 * (plus - minus)));
  }
  return worst;
}

double chsh_classical_bound() {
  int best = 0;
  constexpr int kSigns[2] = {+1, -1};
  for (int a0 : kSigns)
    for (int a1 : kSigns)
      for (int b0 : kSigns)
        for (int b1 : kSigns) best = std::max(best, std::abs(config_weight(a0, a1, b0, b1)));
  if (chsh_joint_identity_max_error(100, 20240u) >= 1e-12)
    throw std::logic_error("joint-distribution identity failed");
  return best;
}

double chsh_quantum_value(double a0, double a1, double b0, double b1) {
  const auto e = [](double x, double y) { return -std::cos(x - y); };
  return std::abs(e(a0, b0) + e(a0, b1) + e(a1, b0) - e(a1, b1));
}

double chsh_grid_max(int steps) {
  // cos of every grid difference; the expression separates into a term in a0
  // and a term in a1, so max/min over each factor grid is exact.
  std::vector<double> ct(steps);
  const double step = 2.0 * std::numbers::pi / steps;
  for (int i = 0; i < steps; ++i) ct[i] = std::cos(i * step);
  const auto diff = [&](int i, int j) { return ct[(i - j + steps) % steps]; };

  double best = 0.0;
  for (int b0 = 0; b0 < steps; ++b0)
    for (int b1 = 0; b1 < steps; ++b1) {
      double umax = -4.0, umin = 4.0, wmax = -4.0, wmin = 4.0;
      for (int a = 0; a < steps; ++a) {
        const double u = -diff(a, b0) - diff(a, b1);
        const double w = -diff(a, b0) + diff(a, b1);
        umax = std::max(umax, u);
        umin = std::min(umin, u);
        wmax = std::max(wmax, w);
        wmin = std::min(wmin, w);
      }
      best = std::max(best, std::max(umax + wmax, -(umin + wmin)));
    }
  return best;
}

}  // namespace s4bell
