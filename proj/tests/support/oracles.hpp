#pragma once

#include <string>
#include <vector>

#include "indrep/character.hpp"
#include "indrep/lattice.hpp"
#include "indrep/subgroup.hpp"

namespace indrep::testing {

/// Subgroup conjugacy classes found by closing cyclic subgroups under joins,
/// with closures and conjugation computed element by element.
struct BruteLattice {
  /// Each class lists all its conjugates.
  std::vector<std::vector<ElementSet>> classes;
};
BruteLattice brute_force_lattice(const FiniteGroup& G);

/// Empty when the two lattices agree on classes, orders, lengths and containment.
std::string compare_lattices(const FiniteGroup& G, const SubgroupLattice& L, const BruteLattice& B);

/// Ind_H^G(chi)(g) = sum over a right transversal t of chi(t g t^-1), chi zero off H.
Character transversal_induce(const FiniteGroup& G, const ClassInfoPtr& G_classes, const Embedded& H,
                             const Character& chi);

}  // namespace indrep::testing
