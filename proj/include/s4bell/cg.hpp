#pragma once

#include <array>
#include <string_view>

#include "s4bell/rep3.hpp"

namespace s4bell {

using Vector9 = Eigen::Matrix<double, 9, 1>;
using Matrix9 = Eigen::Matrix<double, 9, 9>;

/// Irreducible components of D (x) D, in the row-block order of the
/// Clebsch-Gordan matrix: rows 0-2 carry D, 3-5 Dtilde, 6-7 D2, 8 D0.
enum class Irrep { D, Dtilde, D2, D0 };

inline constexpr std::array<Irrep, 4> kIrreps{Irrep::D, Irrep::Dtilde, Irrep::D2, Irrep::D0};

constexpr int irrep_dim(Irrep s) {
  switch (s) {
    case Irrep::D: return 3;
    case Irrep::Dtilde: return 3;
    case Irrep::D2: return 2;
    case Irrep::D0: return 1;
  }
  return 0;
}

constexpr int irrep_row_begin(Irrep s) {
  switch (s) {
    case Irrep::D: return 0;
    case Irrep::Dtilde: return 3;
    case Irrep::D2: return 6;
    case Irrep::D0: return 8;
  }
  return 0;
}

std::string_view irrep_name(Irrep s);  // "D", "Dtilde", "D2", "D0"

/// u (x) w with flat component 3*(i-1)+j for 1-based (i, j): tensor(u,w)[3i+j] = u[i]*w[j].
Vector9 tensor(const Vector3& u, const Vector3& w);

/// The orthogonal 9x9 Clebsch-Gordan matrix making D (x) D = D + Dtilde + D2 + D0 explicit.
const Matrix9& cg_matrix();

/// Components of t in the irrep-s row block of C.
Eigen::VectorXd project(const Matrix9& cg, const Vector9& t, Irrep s);

/// The same projection evaluated from the closed-form bilinears
/// (D0: (u.w)/sqrt(3); Dtilde: the cross-product components; D and D2:
/// the corresponding symmetric bilinear combinations), component order
/// matching the C row blocks.
Eigen::VectorXd project_closed_form(const Vector3& u, const Vector3& w, Irrep s);

/// Eigenvalues of X(gtilde, v) per irreducible block,
/// x_s = (|G| / d_s) * ||(v (x) D(gtilde) v)_s||^2.
struct IrrepSpectrum {
  Permutation gtilde;
  CosetCoord coords;
  std::array<double, 4> x{};  // indexed by Irrep enum order

  double operator[](Irrep s) const { return x[static_cast<int>(s)]; }
  double max_eigenvalue() const;
  /// Irrep attaining the maximum; ties broken toward D0, then D, Dtilde, D2.
  Irrep max_irrep() const;
  /// 3 x_D + 3 x_Dtilde + 2 x_D2 + x_D0 (equals 24).
  double weighted_trace() const;
};

IrrepSpectrum x_spectrum(const GroupTable& group, const StandardRep& rep, const Matrix9& cg,
                         const Permutation& gtilde);

/// X(gtilde, v) itself: the sum of the 24 rank-1 projectors onto
/// D(g')v (x) D(g' gtilde)v. Kept as a cross-check for the projection route.
Matrix9 x_operator(const GroupTable& group, const StandardRep& rep, const Permutation& gtilde);

/// Kronecker square D(p) (x) D(p) in the tensor flat-index convention.
Matrix9 diagonal_action(const Matrix3& m);

}  // namespace s4bell
