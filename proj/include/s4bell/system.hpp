#pragma once

#include "s4bell/cg.hpp"
#include "s4bell/permgroup.hpp"
#include "s4bell/rep3.hpp"

namespace s4bell {

/// Everything the bound computations need, built once.
struct System {
  GroupTable group;
  StandardRep rep;
  OrbitBasis orbit;
  Matrix9 cg;  // copy of cg_matrix(); `verify --corrupt-cg` perturbs it

  static System build() {
    GroupTable g = GroupTable::build();
    StandardRep r = StandardRep::build(g);
    OrbitBasis o = OrbitBasis::build(g, r);
    return System{std::move(g), std::move(r), std::move(o), cg_matrix()};
  }

  IrrepSpectrum spectrum(const Permutation& gtilde) const {
    return x_spectrum(group, rep, cg, gtilde);
  }
};

}  // namespace s4bell
