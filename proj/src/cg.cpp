#include "s4bell/cg.hpp"

#include <cmath>

namespace s4bell {

std::string_view irrep_name(Irrep s) {
  switch (s) {
    case Irrep::D: return "D";
    case Irrep::Dtilde: return "Dtilde";
    case Irrep::D2: return "D2";
    case Irrep::D0: return "D0";
  }
  return "?";
}

Vector9 tensor(const Vector3& u, const Vector3& w) {
  Vector9 t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[3 * i + j] = u[i] * w[j];
  return t;
}

const Matrix9& cg_matrix() {
  static const Matrix9 c = [] {
    const double q2 = 1.0 / std::sqrt(2.0);
    const double q3 = 1.0 / std::sqrt(3.0);
    const double q6 = 1.0 / std::sqrt(6.0);
    const double q23 = std::sqrt(2.0 / 3.0);
    Matrix9 m;
    m << q23, 0, 0, 0, -q6, 0, 0, 0, -q6,     // D
        0, -q6, 0, -q6, q3, 0, 0, 0, -q3,     //
        0, 0, -q6, 0, 0, -q3, -q6, -q3, 0,    //
        0, q2, 0, -q2, 0, 0, 0, 0, 0,         // Dtilde
        0, 0, q2, 0, 0, 0, -q2, 0, 0,         //
        0, 0, 0, 0, 0, q2, 0, -q2, 0,         //
        0, q3, 0, q3, q6, 0, 0, 0, -q6,       // D2
        0, 0, q3, 0, 0, -q6, q3, -q6, 0,      //
        q3, 0, 0, 0, q3, 0, 0, 0, q3;         // D0
    return m;
  }();
  return c;
}

Eigen::VectorXd project(const Matrix9& cg, const Vector9& t, Irrep s) {
  return cg.middleRows(irrep_row_begin(s), irrep_dim(s)) * t;
}

Eigen::VectorXd project_closed_form(const Vector3& u, const Vector3& w, Irrep s) {
  const double q2 = 1.0 / std::sqrt(2.0);
  const double q3 = 1.0 / std::sqrt(3.0);
  const double q6 = 1.0 / std::sqrt(6.0);
  Eigen::VectorXd out(irrep_dim(s));
  switch (s) {
    case Irrep::D:
      out[0] = std::sqrt(2.0 / 3.0) * u[0] * w[0] - q6 * (u[1] * w[1] + u[2] * w[2]);
      out[1] = q3 * (u[1] * w[1] - u[2] * w[2]) - q6 * (u[0] * w[1] + u[1] * w[0]);
      out[2] = -q3 * (u[1] * w[2] + u[2] * w[1]) - q6 * (u[0] * w[2] + u[2] * w[0]);
      break;
    case Irrep::Dtilde: {
      const Vector3 x = u.cross(w);
      out[0] = q2 * x[2];
      out[1] = -q2 * x[1];
      out[2] = q2 * x[0];
      break;
    }
    case Irrep::D2:
      out[0] = q3 * (u[0] * w[1] + u[1] * w[0]) + q6 * (u[1] * w[1] - u[2] * w[2]);
      out[1] = q3 * (u[0] * w[2] + u[2] * w[0]) - q6 * (u[1] * w[2] + u[2] * w[1]);
      break;
    case Irrep::D0:
      out[0] = q3 * u.dot(w);
      break;
  }
  return out;
}

double IrrepSpectrum::max_eigenvalue() const { return (*this)[max_irrep()]; }

Irrep IrrepSpectrum::max_irrep() const {
  constexpr std::array<Irrep, 4> priority{Irrep::D0, Irrep::D, Irrep::Dtilde, Irrep::D2};
  Irrep best = priority[0];
  for (Irrep s : priority)
    if ((*this)[s] > (*this)[best]) best = s;
  return best;
}

double IrrepSpectrum::weighted_trace() const {
  double t = 0.0;
  for (Irrep s : kIrreps) t += irrep_dim(s) * (*this)[s];
  return t;
}

IrrepSpectrum x_spectrum(const GroupTable& group, const StandardRep& rep, const Matrix9& cg,
                         const Permutation& gtilde) {
  const Vector3 v = base_vector();
  const Vector9 t = tensor(v, rep_matrix(group, rep, gtilde) * v);
  IrrepSpectrum spec;
  spec.gtilde = gtilde;
  spec.coords = group.coset_factorize(gtilde);
  for (Irrep s : kIrreps) {
    const Eigen::VectorXd p = project(cg, t, s);
    spec.x[static_cast<int>(s)] = GroupTable::kOrder / double(irrep_dim(s)) * p.squaredNorm();
  }
  return spec;
}

Matrix9 x_operator(const GroupTable& group, const StandardRep& rep, const Permutation& gtilde) {
  const Vector3 v = base_vector();
  Matrix9 x = Matrix9::Zero();
  for (const auto& gp : group.elements()) {
    const Vector9 u =
        tensor(rep_matrix(group, rep, gp) * v, rep_matrix(group, rep, compose(gp, gtilde)) * v);
    x += u * u.transpose();
  }
  return x;
}

Matrix9 diagonal_action(const Matrix3& m) {
  Matrix9 k;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) k(3 * i + j, 3 * a + b) = m(i, a) * m(j, b);
  return k;
}

}  // namespace s4bell
