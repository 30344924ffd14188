// Command-line driver: quantum and classical bounds on orbit probability
// sums for the standard 3-dimensional representation of S4.
//
// Exit codes: 0 success, 1 check/verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "s4bell/serialize.hpp"

namespace {

using namespace s4bell;

/// "(2,2)" / "2,2" coset labels or "(1324)" / "1324" one-line permutations.
Permutation parse_orbit_argument(const GroupTable& group, const std::string& text) {
  std::string s = text;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  const auto comma = s.find(',');
  if (comma != std::string::npos) {
    int alpha = 0, l = 0;
    char extra = 0;
    if (std::sscanf(s.c_str(), "%d ,%d %c", &alpha, &l, &extra) != 2 &&
        std::sscanf(s.c_str(), "%d,%d%c", &alpha, &l, &extra) != 2)
      throw std::invalid_argument("bad orbit label: " + text);
    if (alpha < 1 || alpha > 8 || l < 0 || l > 2)
      throw std::invalid_argument("orbit label out of range: " + text);
    return group.element(CosetCoord{alpha, l});
  }
  return parse_one_line(text);
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out_path);
  f << content;
}

std::string two_dec(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

// ---- verify ---------------------------------------------------------------

struct CheckLedger {
  bool all_pass = true;
  std::ostringstream out;

  void check(const std::string& name, bool pass, const std::string& detail = "") {
    all_pass &= pass;
    out << (pass ? "pass  " : "FAIL  ") << name;
    if (!detail.empty()) out << "  (" << detail << ")";
    out << '\n';
  }
};

int run_verify(const std::string& format, const std::string& out_path, bool corrupt_cg) {
  System sys = System::build();
  if (corrupt_cg) sys.cg(0, 0) += 0.01;

  CheckLedger led;
  char buf[128];

  led.check("group: 24 elements", sys.group.elements().size() == 24);
  led.check("group: class sizes {8,6,6,3,1}",
            sys.group.class_sizes() == std::array<int, 5>{8, 6, 6, 3, 1});

  bool roundtrip = true;
  for (int i = 0; i < GroupTable::kOrder; ++i) {
    const CosetCoord c = coord_from_flat(i);
    roundtrip &= sys.group.coset_factorize(sys.group.element(c)) == c;
  }
  led.check("group: coset factorization bijection", roundtrip);

  bool labels_ok = true, classes_ok = true;
  for (const ReferenceSpectrumRow& row : reference_table2()) {
    const Permutation p = parse_one_line(row.one_line);
    labels_ok &= sys.group.coset_factorize(p) == CosetCoord{row.alpha, row.l};
    classes_ok &= sys.group.conjugacy_class(p) == row.cls;
  }
  led.check("table2: (alpha,l) labels 24/24", labels_ok);
  led.check("table2: class column 24/24", classes_ok);

  std::snprintf(buf, sizeof buf, "max err %.2e, %s order", sys.rep.homomorphism_error(),
                sys.rep.word_order() == WordOrder::kForward ? "forward" : "reversed");
  led.check("rep: homomorphism over 576 pairs < 1e-12", sys.rep.homomorphism_error() < 1e-12, buf);

  double orth = 0.0;
  for (int i = 0; i < GroupTable::kOrder; ++i) {
    const Matrix3& m = sys.rep.matrix(i);
    orth = std::max(orth, (m * m.transpose() - Matrix3::Identity()).cwiseAbs().maxCoeff());
  }
  led.check("rep: orthogonality < 1e-12", orth < 1e-12);

  bool faithful = true;
  for (int i = 0; i < GroupTable::kOrder; ++i)
    for (int j = i + 1; j < GroupTable::kOrder; ++j)
      faithful &= (sys.rep.matrix(i) - sys.rep.matrix(j)).cwiseAbs().maxCoeff() > 1e-6;
  led.check("rep: 24 distinct matrices", faithful);

  bool char_ok = true;
  for (const auto& p : sys.group.elements()) {
    const double tr = rep_matrix(sys.group, sys.rep, p).trace();
    double expected = 0.0;
    switch (sys.group.conjugacy_class(p)) {
      case ConjugacyClass::I: expected = 0.0; break;
      case ConjugacyClass::II: expected = 1.0; break;
      case ConjugacyClass::III: expected = -1.0; break;
      case ConjugacyClass::IV: expected = -1.0; break;
      case ConjugacyClass::V: expected = 3.0; break;
    }
    char_ok &= std::abs(tr - expected) < 1e-12;
  }
  led.check("rep: character (3,1,0,-1,-1) by class", char_ok);

  const Vector3 v = base_vector();
  const Matrix3& dg = rep_matrix(sys.group, sys.rep, sys.group.generator());
  led.check("orbit: (v, D(g^l) v) = 0 for l=1,2",
            std::abs(v.dot(dg * v)) < 1e-12 && std::abs(v.dot(dg * (dg * v))) < 1e-12);

  const double cgo = (sys.cg * sys.cg.transpose() - Matrix9::Identity()).cwiseAbs().maxCoeff();
  std::snprintf(buf, sizeof buf, "max err %.2e", cgo);
  led.check("cg: C orthogonal < 1e-12", cgo < 1e-12, buf);

  double proj_err = 0.0;
  for (int i = 0; i < GroupTable::kOrder; ++i)
    for (Irrep s : kIrreps) {
      const Vector3 u = sys.orbit.vector(coord_from_flat(i));
      const Eigen::VectorXd a = project(sys.cg, tensor(v, u), s);
      const Eigen::VectorXd b = project_closed_form(v, u, s);
      proj_err = std::max(proj_err, (a - b).cwiseAbs().maxCoeff());
    }
  std::snprintf(buf, sizeof buf, "max err %.2e", proj_err);
  led.check("cg: row projections match closed forms < 1e-12", proj_err < 1e-12, buf);

  double trace_err = 0.0;
  for (const auto& p : sys.group.elements())
    trace_err = std::max(trace_err, std::abs(sys.spectrum(p).weighted_trace() - 24.0));
  std::snprintf(buf, sizeof buf, "max err %.2e", trace_err);
  led.check("spectra: trace rule 3xD+3xDt+2xD2+xD0 = 24 < 1e-9", trace_err < 1e-9, buf);

  double xop_err = 0.0;
  for (const char* lbl : {"(1234)", "(1324)", "(2143)"}) {
    const Permutation p = parse_one_line(lbl);
    const Matrix9 x = x_operator(sys.group, sys.rep, p);
    const IrrepSpectrum spec = sys.spectrum(p);
    for (Irrep s : kIrreps)
      for (int r = 0; r < irrep_dim(s); ++r) {
        const Vector9 row = sys.cg.row(irrep_row_begin(s) + r).transpose();
        xop_err = std::max(xop_err, (x * row - spec[s] * row).cwiseAbs().maxCoeff());
      }
  }
  std::snprintf(buf, sizeof buf, "max err %.2e", xop_err);
  led.check("spectra: X acts as x_s on each C row < 1e-9", xop_err < 1e-9, buf);

  led.check("chsh: classical bound = 2", chsh_classical_bound() == 2.0);

  std::string text = led.out.str();
  text += led.all_pass ? "verify: all checks passed\n" : "verify: FAILURES present\n";
  if (format == "json") {
    emit(json{{"all_pass", led.all_pass}}.dump(2) + "\n", out_path);
  } else {
    emit(text, out_path);
  }
  return led.all_pass ? 0 : 1;
}

// ---- table2 ---------------------------------------------------------------

int run_table2(const System& sys, const std::string& format, const std::string& out_path) {
  if (format == "csv") {
    emit(spectrum_table_csv(sys), out_path);
    return 0;
  }
  if (format == "json") {
    json rows = json::array();
    for (const ReferenceSpectrumRow& row : reference_table2()) {
      const Permutation p = parse_one_line(row.one_line);
      json j = to_json(sys.spectrum(p));
      j["class"] = std::string(to_string(sys.group.conjugacy_class(p)));
      rows.push_back(std::move(j));
    }
    emit(rows.dump(2) + "\n", out_path);
    return 0;
  }
  std::ostringstream out;
  out << "class  gtilde  (a,l)   x_D    x_Dt   x_D2   x_D0   x_max\n";
  for (const ReferenceSpectrumRow& row : reference_table2()) {
    const Permutation p = parse_one_line(row.one_line);
    const IrrepSpectrum spec = sys.spectrum(p);
    char line[160];
    std::snprintf(line, sizeof line, "%-5s  %s  (%d,%d)   %5.2f  %5.2f  %5.2f  %5.2f  %5.2f\n",
                  std::string(to_string(sys.group.conjugacy_class(p))).c_str(),
                  to_string(p).c_str(), spec.coords.alpha, spec.coords.l, spec[Irrep::D],
                  spec[Irrep::Dtilde], spec[Irrep::D2], spec[Irrep::D0], spec.max_eigenvalue());
    out << line;
  }
  emit(out.str(), out_path);
  return 0;
}

// ---- bound ----------------------------------------------------------------

int run_bound(const System& sys, const std::vector<std::string>& labels, const std::string& format,
              const std::string& out_path) {
  std::vector<Permutation> gtildes;
  for (const auto& text : labels) gtildes.push_back(parse_orbit_argument(sys.group, text));
  const BoundReport r = make_bound_report(sys, OrbitSet::of(std::move(gtildes)));

  if (format == "json") {
    emit(to_json(r).dump(2) + "\n", out_path);
    return 0;
  }
  if (format == "csv") {
    emit(bound_csv_header() + bound_csv_row(r), out_path);
    return 0;
  }
  std::ostringstream out;
  out << "orbit set:";
  for (std::size_t i = 0; i < r.labels.size(); ++i)
    out << ' ' << to_string(r.labels[i]) << " [" << to_string(r.gtildes[i]) << "]";
  out << "\nclassical bound B:    " << r.classical_bound << '\n';
  if (r.cycle_lower_bound) out << "cycle lower bound B': " << *r.cycle_lower_bound << '\n';
  out << "per-irrep quantum sums:";
  for (Irrep s : kIrreps)
    out << ' ' << irrep_name(s) << '=' << two_dec(r.per_irrep_sums[static_cast<int>(s)]);
  out << "\nquantum bound:        " << two_dec(r.quantum_bound) << " (" << irrep_name(r.quantum_arg)
      << ")\n";
  if (r.violation) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "VIOLATION (ratio %.2f%%)", 100.0 * r.violation_ratio);
    out << "violation:            " << buf << '\n';
  } else {
    out << "violation:            none\n";
  }
  emit(out.str(), out_path);
  return 0;
}

// ---- cycles ---------------------------------------------------------------

int run_cycles(const System& sys, const std::vector<std::string>& labels, const std::string& format,
               const std::string& out_path) {
  const Permutation g1 = parse_orbit_argument(sys.group, labels[0]);
  const Permutation g2 = parse_orbit_argument(sys.group, labels[1]);
  const CycleDecomposition dec = cycle_decomposition(sys.group, g1, g2);

  if (format == "json") {
    emit(to_json(dec).dump(2) + "\n", out_path);
    return 0;
  }
  if (format == "csv") {
    emit(cycles_csv(dec), out_path);
    return 0;
  }
  std::ostringstream out;
  out << "pair " << to_string(sys.group.coset_factorize(g1)) << ' '
      << to_string(sys.group.coset_factorize(g2)) << ": " << dec.cycles.size()
      << " cycles of length " << dec.cycle_length << "  [order(g1*g2^-1) = "
      << dec.cycle_length / 2 << "]\n";
  for (std::size_t c = 0; c < dec.cycles.size(); ++c) {
    out << "cycle " << c + 1 << ":\n  A:";
    for (const CycleVertex& vx : dec.cycles[c])
      if (vx.orbit == 1) out << "  v" << vx.alice.alpha << vx.alice.l;
    out << "\n  B:";
    for (const CycleVertex& vx : dec.cycles[c])
      if (vx.orbit == 1) out << "  v" << vx.bob.alpha << vx.bob.l;
    out << '\n';
  }
  out << "cycle lower bound B' = " << cycle_lower_bound(sys.group, g1, g2) << '\n';
  emit(out.str(), out_path);
  return 0;
}

// ---- scan -----------------------------------------------------------------

int run_scan(const System& sys, const std::string& format, const std::string& out_dir,
             int threads) {
  const ScanReport report = scan_all(sys, threads);

  namespace fs = std::filesystem;
  const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  fs::create_directories(dir);
  emit(to_json(report).dump(2) + "\n", (dir / "scan.json").string());
  emit(scan_csv(report), (dir / "scan.csv").string());
  const std::string summary = scan_summary(report);
  emit(summary, (dir / "scan.txt").string());

  if (format == "json")
    std::cout << json{{"b_histogram", to_json(report)["b_histogram"]},
                      {"violations", to_json(report)["violations"]}}
                     .dump(2)
              << '\n';
  else
    std::cout << summary;
  std::cout << "wrote " << (dir / "scan.json").string() << ", " << (dir / "scan.csv").string()
            << ", " << (dir / "scan.txt").string() << '\n';
  return 0;
}

// ---- chsh -----------------------------------------------------------------

int run_chsh(const std::string& format, const std::string& out_path) {
  const double classical = chsh_classical_bound();
  const double pi = std::numbers::pi;
  const double quantum = chsh_quantum_value(0.0, pi / 2, pi / 4, 7 * pi / 4);
  const double identity_err = chsh_joint_identity_max_error(100, 20240u);
  if (format == "json") {
    emit(json{{"classical_bound", classical},
              {"quantum_value", quantum},
              {"angles", json::array({0.0, pi / 2, pi / 4, 7 * pi / 4})},
              {"joint_identity_max_error", identity_err}}
                 .dump(2) +
             "\n",
         out_path);
    return 0;
  }
  std::ostringstream out;
  out << "classical " << classical << ", quantum " << format_double(quantum) << '\n'
      << "optimum angles (a0,a1,b0,b1) = (0, pi/2, pi/4, 7pi/4)\n"
      << "joint-distribution identity max error: " << identity_err << '\n';
  emit(out.str(), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classical and quantum bounds for S4 orbit probability sums"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_path, "output file (scan: output directory)");

  auto* verify = app.add_subcommand("verify", "run the structural invariant suite");
  verify->fallthrough();
  bool corrupt_cg = false;
  verify->add_flag("--corrupt-cg", corrupt_cg, "negative control: perturb the CG matrix");

  auto* table2 = app.add_subcommand("table2", "per-irrep eigenvalues for all 24 group elements");
  table2->fallthrough();

  std::vector<std::string> bound_labels;
  auto* bound = app.add_subcommand("bound", "bound report for one or two orbits");
  bound->fallthrough();
  bound->add_option("labels", bound_labels, "orbit labels: (alpha,l) or one-line permutations")
      ->expected(1, 2);

  std::vector<std::string> cycle_labels;
  auto* cycles = app.add_subcommand("cycles", "cycle decomposition for a pair of orbits");
  cycles->fallthrough();
  cycles->add_option("labels", cycle_labels, "two orbit labels")->expected(2);

  auto* scan = app.add_subcommand("scan", "census of all 24 single orbits and 276 pairs");
  scan->fallthrough();
  int threads = 1;
  scan->add_option("--threads", threads, "worker count")->check(CLI::PositiveNumber);

  auto* chsh = app.add_subcommand("chsh", "CHSH baseline values");
  chsh->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(format, out_path, corrupt_cg);
    const System sys = System::build();
    if (table2->parsed()) return run_table2(sys, format, out_path);
    if (bound->parsed()) return run_bound(sys, bound_labels, format, out_path);
    if (cycles->parsed()) return run_cycles(sys, cycle_labels, format, out_path);
    if (scan->parsed()) return run_scan(sys, format, out_path, threads);
    if (chsh->parsed()) return run_chsh(format, out_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
