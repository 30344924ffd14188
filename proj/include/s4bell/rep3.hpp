#pragma once

#include <Eigen/Dense>

#include <array>

#include "s4bell/permgroup.hpp"

namespace s4bell {

using Matrix3 = Eigen::Matrix3d;
using Vector3 = Eigen::Vector3d;

/// The matrix representing the transposition (i j), 1 <= i < j <= 4.
Matrix3 transposition_matrix(int i, int j);

/// (1, 1, 1) / sqrt(3); orthogonal to its images under g and g^2.
Vector3 base_vector();

/// Order in which the transposition-word matrices are multiplied.
enum class WordOrder { kForward, kReversed };

/// The standard 3-dimensional orthogonal representation of S4.
///
/// Matrices for non-transpositions are generated from transposition words.
/// The builder multiplies word matrices left-to-right first; if the full
/// 576-pair homomorphism check D(p*q) = D(p) D(q) fails it retries with the
/// reversed product order. Exactly one order passes; it is recorded.
class StandardRep {
 public:
  static StandardRep build(const GroupTable& group);

  const Matrix3& matrix(int element_index) const { return mats_[element_index]; }

  WordOrder word_order() const { return word_order_; }
  double homomorphism_error() const { return homomorphism_error_; }

 private:
  StandardRep() = default;

  std::array<Matrix3, GroupTable::kOrder> mats_;
  WordOrder word_order_ = WordOrder::kForward;
  double homomorphism_error_ = 0.0;
};

inline const Matrix3& rep_matrix(const GroupTable& group, const StandardRep& rep,
                                 const Permutation& p) {
  return rep.matrix(group.index_of(p));
}

/// The 24 orbit vectors v_{alpha,l} = D(g_alpha) D(g)^l v.
///
/// Construction checks unit norms (1e-12), per-alpha orthonormal triads
/// (1e-9) and pairwise distinctness (regular orbit).
class OrbitBasis {
 public:
  static OrbitBasis build(const GroupTable& group, const StandardRep& rep);

  const Vector3& vector(CosetCoord c) const { return v_[flat_index(c)]; }

 private:
  OrbitBasis() = default;

  std::array<Vector3, GroupTable::kOrder> v_;
};

}  // namespace s4bell
