#pragma once

#include <span>

#include "s4bell/permgroup.hpp"

namespace s4bell {

/// One row of the bundled eigenvalue reference table (values quoted to two
/// decimals), in its original class grouping and row order.
struct ReferenceSpectrumRow {
  const char* one_line;
  int alpha;
  int l;
  ConjugacyClass cls;
  double x_d;
  double x_dtilde;
  double x_d2;
  double x_d0;
  double x_max;
};

/// All 24 rows, presentation order.
std::span<const ReferenceSpectrumRow, 24> reference_table2();

/// A pair of orbits with its quoted classical bound B.
struct ReferenceBoundPair {
  CosetCoord a;
  CosetCoord b;
  int bound;
};

/// The 32 explicitly quoted pairs: nine with B=8, ten with B=12,
/// twelve with B=14 and one with B=16.
std::span<const ReferenceBoundPair> reference_pair_bounds();

/// Worked cycle-diagram examples: expected cycle count and length.
struct ReferenceCycleExample {
  CosetCoord a;
  CosetCoord b;
  int num_cycles;
  int cycle_length;
};

std::span<const ReferenceCycleExample, 4> reference_cycle_examples();

/// The orbit pair whose quantum bound exceeds its classical bound.
struct ViolationCase {
  CosetCoord a{2, 2};
  CosetCoord b{7, 2};
  double quantum = 14.036;  // quoted value
  int classical = 14;
};

inline ViolationCase violation_case() { return {}; }

}  // namespace s4bell
