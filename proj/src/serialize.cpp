#include "s4bell/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace s4bell {

json to_json(CosetCoord c) { return json::array({c.alpha, c.l}); }

json to_json(const IrrepSpectrum& spec) {
  return json{{"gtilde", to_string(spec.gtilde)},
              {"alpha", spec.coords.alpha},
              {"l", spec.coords.l},
              {"x_D", spec[Irrep::D]},
              {"x_Dtilde", spec[Irrep::Dtilde]},
              {"x_D2", spec[Irrep::D2]},
              {"x_D0", spec[Irrep::D0]},
              {"x_max", spec.max_eigenvalue()}};
}

json to_json(const BoundReport& r) {
  json gt = json::array();
  for (const auto& g : r.gtildes) gt.push_back(to_string(g));
  json labels = json::array();
  for (CosetCoord c : r.labels) labels.push_back(to_json(c));
  json sums;
  for (Irrep s : kIrreps) sums[std::string(irrep_name(s))] = r.per_irrep_sums[static_cast<int>(s)];
  json out{{"orbit_set", json{{"gtildes", gt}, {"labels", labels}}},
           {"per_irrep_sums", sums},
           {"quantum_bound", r.quantum_bound},
           {"quantum_arg", std::string(irrep_name(r.quantum_arg))},
           {"classical_bound", r.classical_bound},
           {"violation", r.violation},
           {"violation_ratio", r.violation_ratio}};
  if (r.cycle_lower_bound) out["cycle_lower_bound"] = *r.cycle_lower_bound;
  return out;
}

json to_json(const CycleDecomposition& dec) {
  json cycles = json::array();
  for (const auto& cycle : dec.cycles) {
    json c = json::array();
    for (const CycleVertex& v : cycle)
      c.push_back(json{{"orbit", v.orbit}, {"alice", to_json(v.alice)}, {"bob", to_json(v.bob)}});
    cycles.push_back(std::move(c));
  }
  return cycles;
}

json to_json(const ScanReport& report) {
  json singles = json::array();
  for (const auto& r : report.singles) singles.push_back(to_json(r));
  json pairs = json::array();
  for (const auto& r : report.pairs) pairs.push_back(to_json(r));
  json hist = json::object();
  for (const auto& [b, count] : report.b_histogram) hist[std::to_string(b)] = count;
  json viol = json::array();
  for (const auto& [a, b] : report.violations) viol.push_back(json::array({to_json(a), to_json(b)}));
  return json{{"singles", singles}, {"pairs", pairs}, {"b_histogram", hist}, {"violations", viol}};
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string spectrum_table_csv(const System& sys) {
  std::ostringstream out;
  out << "gtilde,alpha,l,class,x_D,x_Dtilde,x_D2,x_D0,x_max\n";
  for (const ReferenceSpectrumRow& row : reference_table2()) {
    const Permutation p = parse_one_line(row.one_line);
    const IrrepSpectrum spec = sys.spectrum(p);
    out << to_string(p) << ',' << spec.coords.alpha << ',' << spec.coords.l << ','
        << to_string(sys.group.conjugacy_class(p)) << ',' << format_double(spec[Irrep::D]) << ','
        << format_double(spec[Irrep::Dtilde]) << ',' << format_double(spec[Irrep::D2]) << ','
        << format_double(spec[Irrep::D0]) << ',' << format_double(spec.max_eigenvalue()) << '\n';
  }
  return out.str();
}

std::string bound_csv_header() { return "labels,B,Bprime,quantum,irrep,violation\n"; }

std::string bound_csv_row(const BoundReport& r) {
  std::ostringstream out;
  out << '"';
  for (std::size_t i = 0; i < r.labels.size(); ++i) out << (i ? " " : "") << to_string(r.labels[i]);
  out << "\"," << r.classical_bound << ',';
  if (r.cycle_lower_bound) out << *r.cycle_lower_bound;
  out << ',' << format_double(r.quantum_bound) << ',' << irrep_name(r.quantum_arg) << ','
      << (r.violation ? "true" : "false") << '\n';
  return out.str();
}

std::string scan_csv(const ScanReport& report) {
  std::string out = bound_csv_header();
  for (const auto& r : report.singles) out += bound_csv_row(r);
  for (const auto& r : report.pairs) out += bound_csv_row(r);
  return out;
}

std::string cycles_csv(const CycleDecomposition& dec) {
  std::ostringstream out;
  out << "cycle,position,orbit,alice_alpha,alice_l,bob_alpha,bob_l\n";
  for (std::size_t c = 0; c < dec.cycles.size(); ++c)
    for (std::size_t k = 0; k < dec.cycles[c].size(); ++k) {
      const CycleVertex& v = dec.cycles[c][k];
      out << c + 1 << ',' << k + 1 << ',' << v.orbit << ',' << v.alice.alpha << ',' << v.alice.l
          << ',' << v.bob.alpha << ',' << v.bob.l << '\n';
    }
  return out.str();
}

std::string scan_summary(const ScanReport& report) {
  std::ostringstream out;
  out << "orbit census: " << report.singles.size() << " single orbits, " << report.pairs.size()
      << " pairs\n\n";

  out << "classical bound histogram (pairs):\n";
  for (int b = 8; b <= 16; ++b) {
    const auto it = report.b_histogram.find(b);
    const int count = it == report.b_histogram.end() ? 0 : it->second;
    if (count == 0 && b != 10) continue;
    out << "  B = " << b << ": " << count << " pair" << (count == 1 ? "" : "s");
    if (b == 10 && count == 0) out << "  (no pair attains 10; the full census settles this)";
    out << '\n';
  }

  out << "\nviolations (quantum > classical):\n";
  if (report.violations.empty()) out << "  none\n";
  for (const auto& [a, b] : report.violations) {
    out << "  " << to_string(a) << " " << to_string(b);
    for (const auto& r : report.pairs)
      if (r.labels.size() == 2 && r.labels[0] == a && r.labels[1] == b) {
        char buf[64];
        std::snprintf(buf, sizeof buf, ": classical %d, quantum %.3f (%s), ratio %.4f%%",
                      r.classical_bound, r.quantum_bound,
                      std::string(irrep_name(r.quantum_arg)).c_str(),
                      100.0 * r.violation_ratio);
        out << buf;
      }
    out << '\n';
  }

  out << "\nreference bound checks:\n";
  int mismatches = 0;
  for (const ReferenceBoundCheck& c : check_reference_bounds(report)) {
    if (!c.match) {
      ++mismatches;
      out << "  MISMATCH " << to_string(c.a) << " " << to_string(c.b) << ": stated " << c.stated
          << ", computed " << c.computed << '\n';
    }
  }
  const auto total = reference_pair_bounds().size();
  out << "  " << (total - mismatches) << "/" << total << " quoted pair bounds reproduced\n";
  return out.str();
}

}  // namespace s4bell
