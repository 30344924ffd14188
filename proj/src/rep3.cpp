#include "s4bell/rep3.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace s4bell {

namespace {

const double kS2 = std::sqrt(2.0);
const double kS3 = std::sqrt(3.0);
const double kS6 = std::sqrt(6.0);
const double kS8 = std::sqrt(8.0);

/// p as a transposition word in apply-order (leftmost factor applied first).
std::vector<std::pair<int, int>> transposition_word(const Permutation& p) {
  std::vector<std::pair<int, int>> w;
  Permutation q = p;
  while (!q.is_identity()) {
    int i = 1;
    while (q(i) == i) ++i;
    const int j = q(i);
    q = compose(q, transposition(q.degree(), i, j));
    w.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::reverse(w.begin(), w.end());
  return w;
}

double max_homomorphism_error(const GroupTable& group,
                          const std::array<Matrix3, GroupTable::kOrder>& mats) {
  double err = 0.0;
  for (const auto& p : group.elements()) {
    for (const auto& q : group.elements()) {
      const Matrix3 lhs = mats[group.index_of(compose(p, q))];
      const Matrix3 rhs = mats[group.index_of(p)] * mats[group.index_of(q)];
      err = std::max(err, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  return err;
}

}  // namespace

Matrix3 transposition_matrix(int i, int j) {
  if (i < 1 || j > 4 || i >= j) throw std::invalid_argument("need 1 <= i < j <= 4");
  Matrix3 m;
  if (i == 1 && j == 2) {
    m << 1, 0, 0, 0, 1, 0, 0, 0, -1;
  } else if (i == 1 && j == 3) {
    m << 1, 0, 0, 0, -0.5, -kS3 / 2, 0, -kS3 / 2, 0.5;
  } else if (i == 1 && j == 4) {
    m << -1.0 / 3, -kS2 / 3, -kS6 / 3, -kS2 / 3, 5.0 / 6, -kS3 / 6, -kS6 / 3, -kS3 / 6, 0.5;
  } else if (i == 2 && j == 3) {
    m << 1, 0, 0, 0, -0.5, kS3 / 2, 0, kS3 / 2, 0.5;
  } else if (i == 2 && j == 4) {
    m << -1.0 / 3, -kS2 / 3, kS6 / 3, -kS2 / 3, 5.0 / 6, kS3 / 6, kS6 / 3, kS3 / 6, 0.5;
  } else {  // (3 4)
    m << -1.0 / 3, kS8 / 3, 0, kS8 / 3, 1.0 / 3, 0, 0, 0, 1;
  }
  return m;
}

Vector3 base_vector() { return Vector3::Constant(1.0 / kS3); }

StandardRep StandardRep::build(const GroupTable& group) {
  StandardRep rep;
  for (WordOrder wo : {WordOrder::kForward, WordOrder::kReversed}) {
    for (const auto& p : group.elements()) {
      Matrix3 m = Matrix3::Identity();
      for (auto [i, j] : transposition_word(p)) {
        const Matrix3 t = transposition_matrix(i, j);
        m = (wo == WordOrder::kForward) ? Matrix3(m * t) : Matrix3(t * m);
      }
      rep.mats_[group.index_of(p)] = m;
    }
    rep.word_order_ = wo;
    rep.homomorphism_error_ = max_homomorphism_error(group, rep.mats_);
    if (rep.homomorphism_error_ < 1e-12) break;
  }
  if (rep.homomorphism_error_ >= 1e-12)
    throw std::logic_error("no multiplication order satisfies the homomorphism check");

  for (const auto& m : rep.mats_)
    if ((m * m.transpose() - Matrix3::Identity()).cwiseAbs().maxCoeff() >= 1e-12)
      throw std::logic_error("representation matrix is not orthogonal");

  return rep;
}

OrbitBasis OrbitBasis::build(const GroupTable& group, const StandardRep& rep) {
  OrbitBasis basis;
  const Vector3 v = base_vector();
  const Matrix3& dg = rep_matrix(group, rep, group.generator());
  for (int a = 1; a <= GroupTable::kCosets; ++a) {
    const Matrix3& da = rep_matrix(group, rep, group.coset_reps()[a - 1]);
    Vector3 w = v;
    for (int l = 0; l < GroupTable::kSubgroupOrder; ++l) {
      basis.v_[flat_index(CosetCoord{a, l})] = da * w;
      w = dg * w;
    }
  }

  for (const auto& u : basis.v_)
    if (std::abs(u.norm() - 1.0) >= 1e-12) throw std::logic_error("orbit vector is not unit norm");
  for (int a = 1; a <= GroupTable::kCosets; ++a)
    for (int l1 = 0; l1 < 3; ++l1)
      for (int l2 = l1 + 1; l2 < 3; ++l2) {
        const double dot = basis.vector(CosetCoord{a, l1}).dot(basis.vector(CosetCoord{a, l2}));
        if (std::abs(dot) >= 1e-9) throw std::logic_error("orbit triad is not orthonormal");
      }
  for (int i = 0; i < GroupTable::kOrder; ++i)
    for (int j = i + 1; j < GroupTable::kOrder; ++j)
      if ((basis.v_[i] - basis.v_[j]).cwiseAbs().maxCoeff() <= 1e-6)
        throw std::logic_error("orbit is not regular");

  return basis;
}

}  // namespace s4bell
