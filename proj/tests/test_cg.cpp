#include <doctest.h>

#include <cmath>
#include <random>

#include "s4bell/reference.hpp"
#include "s4bell/system.hpp"

using namespace s4bell;

namespace {

const System& sys() {
  static const System s = System::build();
  return s;
}

// Spectra for all 24 elements, frozen from exact (symbolic) evaluation of the
// projection formula; entries are x_D, x_Dtilde, x_D2, x_D0 to 18 digits.
struct ExactRow {
  const char* one_line;
  double x[4];
};
constexpr ExactRow kExact[24] = {
    {"(1342)", {4.62845245439052946, 1.34830987901800681, 0.383166378905202406, 5.30338024196398639}},
    {"(1423)", {4.62845245439052946, 1.34830987901800681, 0.383166378905202406, 5.30338024196398639}},
    {"(2314)", {1.97676233340853627, 4.00000000000000000, 3.03485649988719560, 0.0}},
    {"(2431)", {2.37182406180359800, 3.60493827160493827, 2.63979477149213387, 0.790123456790123457}},
    {"(3124)", {1.97676233340853627, 4.00000000000000000, 3.03485649988719560, 0.0}},
    {"(3241)", {2.97648581721440881, 3.00027651619412746, 2.03513301608132305, 1.99944696761174509}},
    {"(4132)", {2.37182406180359800, 3.60493827160493827, 2.63979477149213387, 0.790123456790123457}},
    {"(4213)", {2.97648581721440881, 3.00027651619412746, 2.03513301608132305, 1.99944696761174509}},
    {"(1243)", {3.95061728395061728, 0.299203679162751547, 1.92447223449269830, 7.40159264167449691}},
    {"(1324)", {4.59121653414627230, 0.682621504383220183, 0.771864446588981464, 6.63475699123355963}},
    {"(1432)", {4.76154642386709681, 1.71479457449004188, 0.000283076954333850461, 4.57041085101991623}},
    {"(2134)", {0.694265407557813275, 3.55555555555555556, 5.18082411088550231, 0.888888888888888889}},
    {"(3214)", {2.71451805829591443, 3.76182294006122426, 2.04731144252551623, 0.476354119877551478}},
    {"(4231)", {3.33431162536521338, 1.93952641316427910, 2.02876935537004038, 4.12094717367144179}},
    {"(2341)", {2.73830875727563307, 3.73803224108150562, 2.02352074354579758, 0.523935517836988767}},
    {"(2413)", {1.31107395877374964, 3.96276407975574284, 4.05200702196150412, 0.0744718404885143273}},
    {"(3421)", {1.92737961735915355, 2.32244134575421528, 3.94770990108416203, 3.35511730849156944}},
    {"(3142)", {1.31107395877374964, 3.96276407975574284, 4.05200702196150412, 0.0744718404885143273}},
    {"(4312)", {1.92737961735915355, 2.32244134575421528, 3.94770990108416203, 3.35511730849156944}},
    {"(4123)", {2.73830875727563307, 3.73803224108150562, 2.02352074354579758, 0.523935517836988767}},
    {"(2143)", {0.395061728395061728, 3.65141360478786574, 5.58170060501347454, 0.697172790424268526}},
    {"(3412)", {0.999723483805872544, 3.04675184937705492, 4.97703884960266372, 1.90649630124589016}},
    {"(4321)", {2.65169012098199319, 1.39478521220093427, 3.32507221242654307, 5.21042957559813145}},
    {"(1234)", {4.04647533318292747, 0.0, 1.93028700022560880, 8.00000000000000000}},
};

}  // namespace

TEST_CASE("tensor product") {
  Vector3 e1 = Vector3::Unit(0), e2 = Vector3::Unit(1);
  const Vector9 t = tensor(e1, e2);
  for (int k = 0; k < 9; ++k) CHECK(t[k] == (k == 1 ? 1.0 : 0.0));  // flat 3(i-1)+j, 1-based

  const Vector9 vv = tensor(base_vector(), base_vector());
  for (int k = 0; k < 9; ++k) CHECK(vv[k] == doctest::Approx(1.0 / 3).epsilon(1e-15));

  const Vector9 t2 = tensor(sys().orbit.vector(CosetCoord{1, 0}), sys().orbit.vector(CosetCoord{2, 2}));
  CHECK(std::abs(t2.norm() - 1.0) < 1e-12);
}

TEST_CASE("CG matrix rows and orthogonality") {
  const Matrix9& c = cg_matrix();
  const double q2 = 1.0 / std::sqrt(2.0), q3 = 1.0 / std::sqrt(3.0);

  Vector9 row8;  // D0 row
  row8 << q3, 0, 0, 0, q3, 0, 0, 0, q3;
  CHECK((c.row(8).transpose() - row8).cwiseAbs().maxCoeff() < 1e-15);

  Vector9 row3;  // first Dtilde row
  row3 << 0, q2, 0, -q2, 0, 0, 0, 0, 0;
  CHECK((c.row(3).transpose() - row3).cwiseAbs().maxCoeff() < 1e-15);

  CHECK((c * c.transpose() - Matrix9::Identity()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("projections of v (x) v") {
  const Vector3 v = base_vector();
  const Vector9 t = tensor(v, v);

  const Eigen::VectorXd d0 = project(sys().cg, t, Irrep::D0);
  CHECK(d0.size() == 1);
  CHECK(d0[0] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));

  const Eigen::VectorXd dt = project(sys().cg, t, Irrep::Dtilde);
  CHECK(dt.cwiseAbs().maxCoeff() < 1e-15);

  const Eigen::VectorXd d = project(sys().cg, t, Irrep::D);
  CHECK(d[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(d[1] == doctest::Approx(-0.272165526975908678).epsilon(1e-14));
  CHECK(d[2] == doctest::Approx(-0.657065706435659187).epsilon(1e-14));
}

TEST_CASE("row projections equal closed forms on random vectors") {
  std::mt19937 rng(321);
  std::normal_distribution<double> gauss;
  for (int n = 0; n < 100; ++n) {
    Vector3 u, w;
    for (int i = 0; i < 3; ++i) {
      u[i] = gauss(rng);
      w[i] = gauss(rng);
    }
    for (Irrep s : kIrreps) {
      const Eigen::VectorXd a = project(sys().cg, tensor(u, w), s);
      const Eigen::VectorXd b = project_closed_form(u, w, s);
      REQUIRE((a - b).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("spectra match exact values for all 24 elements") {
  for (const ExactRow& row : kExact) {
    const IrrepSpectrum spec = sys().spectrum(parse_one_line(row.one_line));
    for (int i = 0; i < 4; ++i) REQUIRE(std::abs(spec.x[i] - row.x[i]) < 1e-12);
  }
}

TEST_CASE("trace rule for all elements") {
  for (const auto& p : sys().group.elements())
    CHECK(std::abs(sys().spectrum(p).weighted_trace() - 24.0) < 1e-9);
}

TEST_CASE("spectrum examples") {
  const IrrepSpectrum id = sys().spectrum(Permutation::identity(4));
  CHECK(std::abs(id[Irrep::D] - 4.05) < 0.006);
  CHECK(std::abs(id[Irrep::Dtilde] - 0.0) < 0.006);
  CHECK(std::abs(id[Irrep::D2] - 1.93) < 0.006);
  CHECK(std::abs(id[Irrep::D0] - 8.0) < 1e-12);
  CHECK(id.max_irrep() == Irrep::D0);
  CHECK(id.max_eigenvalue() == doctest::Approx(8.0).epsilon(1e-12));

  const IrrepSpectrum iv = sys().spectrum(parse_one_line("(2143)"));
  CHECK(std::abs(iv[Irrep::D] - 0.40) < 0.006);
  CHECK(std::abs(iv[Irrep::Dtilde] - 3.65) < 0.006);
  CHECK(std::abs(iv[Irrep::D2] - 5.58) < 0.006);
  CHECK(std::abs(iv[Irrep::D0] - 0.70) < 0.006);
  CHECK(iv.max_irrep() == Irrep::D2);
}

TEST_CASE("spectra are not class functions") {
  // (2341) and (2413) share a conjugacy class but have different spectra.
  const IrrepSpectrum a = sys().spectrum(parse_one_line("(2341)"));
  const IrrepSpectrum b = sys().spectrum(parse_one_line("(2413)"));
  CHECK(sys().group.conjugacy_class(a.gtilde) == sys().group.conjugacy_class(b.gtilde));
  CHECK(std::abs(a[Irrep::D] - b[Irrep::D]) > 0.5);
}

TEST_CASE("X operator") {
  for (const char* lbl : {"(1234)", "(1324)", "(3421)"}) {
    const Permutation p = parse_one_line(lbl);
    const Matrix9 x = x_operator(sys().group, sys().rep, p);

    CHECK(std::abs(x.trace() - 24.0) < 1e-9);
    CHECK((x - x.transpose()).cwiseAbs().maxCoeff() < 1e-12);

    const IrrepSpectrum spec = sys().spectrum(p);
    for (Irrep s : kIrreps)
      for (int r = 0; r < irrep_dim(s); ++r) {
        const Vector9 row = sys().cg.row(irrep_row_begin(s) + r).transpose();
        REQUIRE((x * row - spec[s] * row).cwiseAbs().maxCoeff() < 1e-9);
      }
  }

  // commutes with the diagonal action of every group element
  const Matrix9 x = x_operator(sys().group, sys().rep, parse_one_line("(1324)"));
  for (const auto& gp : sys().group.elements()) {
    const Matrix9 k = diagonal_action(rep_matrix(sys().group, sys().rep, gp));
    CHECK((x * k - k * x).cwiseAbs().maxCoeff() < 1e-9);
  }

  // X(identity) scales the D0 row by 8
  const Matrix9 xid = x_operator(sys().group, sys().rep, Permutation::identity(4));
  const Vector9 d0row = sys().cg.row(8).transpose();
  CHECK((xid * d0row - 8.0 * d0row).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("reference table comparison status") {
  // 18 of the 24 quoted rows agree with computation to within 0.006; the six
  // known deviations are pinned here against exact values.
  int within = 0;
  for (std::size_t i = 0; i < 24; ++i) {
    const ReferenceSpectrumRow& ref = reference_table2()[i];
    const IrrepSpectrum spec = sys().spectrum(parse_one_line(ref.one_line));
    const double dev = std::max({std::abs(spec[Irrep::D] - ref.x_d),
                                 std::abs(spec[Irrep::Dtilde] - ref.x_dtilde),
                                 std::abs(spec[Irrep::D2] - ref.x_d2),
                                 std::abs(spec[Irrep::D0] - ref.x_d0)});
    within += dev < 0.006;
    REQUIRE(std::abs(spec.max_eigenvalue() - ref.x_max) < 0.006);
  }
  CHECK(within == 18);
}
