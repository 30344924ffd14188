#pragma once

#include <string>

#include <json.hpp>

#include "s4bell/scan.hpp"

namespace s4bell {

using json = nlohmann::json;

json to_json(CosetCoord c);                    // [alpha, l]
json to_json(const IrrepSpectrum& spec);       // {gtilde, alpha, l, class, x_D, ...}
json to_json(const BoundReport& r);
json to_json(const CycleDecomposition& dec);   // bare list of cycles
json to_json(const ScanReport& report);

/// Full-precision decimal form that round-trips to the same double.
std::string format_double(double x);

/// CSV with header gtilde,alpha,l,class,x_D,x_Dtilde,x_D2,x_D0,x_max and one
/// row per group element in reference presentation order.
std::string spectrum_table_csv(const System& sys);

/// CSV with header labels,B,Bprime,quantum,irrep,violation; B' empty for singles.
std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& r);
std::string scan_csv(const ScanReport& report);

std::string cycles_csv(const CycleDecomposition& dec);

/// Plain-text census summary: histogram, violations, reference-bound ledger.
std::string scan_summary(const ScanReport& report);

}  // namespace s4bell
