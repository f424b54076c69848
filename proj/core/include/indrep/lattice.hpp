#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "indrep/subgroup.hpp"

namespace indrep {

struct SubgroupClass {
  Subgroup rep;
  std::size_t order = 1;
  /// Number of conjugates.
  std::size_t length = 1;
  /// The prime of a nontrivial p-group.
  std::optional<std::uint64_t> prime;
  /// Prime power order, the trivial subgroup included.
  bool prime_power = false;
  bool pseudocyclic = false;
  bool large = false;
};

/// Subgroups of G up to conjugacy, ordered by order and then by the least
/// element list over each conjugacy class.
struct SubgroupLattice {
  std::vector<SubgroupClass> classes;
  /// extensions[i]: classes of <R_i, g> for g outside R_i.
  std::vector<std::vector<std::uint32_t>> extensions;
  std::vector<std::vector<std::uint32_t>> minimal_overgroups;
  /// leq[i][j]: some conjugate of R_i lies in R_j.
  std::vector<std::vector<bool>> leq;
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> index;

  std::size_t size() const noexcept { return classes.size(); }
  /// Class of an arbitrary subgroup of G.
  std::uint32_t class_of(const ElementSet& s) const;
  std::vector<std::uint32_t> family_P() const;
  std::vector<std::uint32_t> family_PC() const;
  std::vector<std::uint32_t> family_L() const;
};

/// Cyclic-extension enumeration followed by classification; throws LatticeCapExceeded above cap.
SubgroupLattice subgroup_lattice(const FiniteGroup& G, std::size_t cap = 2000);

/// Fills prime, pseudocyclic and large flags.
void classify(const FiniteGroup& G, SubgroupLattice& L);

/// Largest normal p-subgroup of H.
Subgroup largest_normal_p_subgroup(const FiniteGroup& G, const Subgroup& H, std::uint64_t p);

/// A normal p-subgroup P of H with H/P cyclic, if any.
std::optional<Subgroup> pseudocyclic_kernel(const FiniteGroup& G, const Subgroup& H);

/// O^p(G) for the primes dividing |G|, distinct and in order of p.
std::vector<std::pair<std::uint64_t, Subgroup>> large_residuals(const FiniteGroup& G);

bool is_large(const FiniteGroup& G, const Subgroup& H);

struct OliverVerdict {
  bool oliver = true;
  /// On failure: P normal in H normal in G, |G/H| and |P| prime powers, H/P cyclic.
  std::optional<Subgroup> P, H;
};

OliverVerdict is_oliver(const FiniteGroup& G);

}  // namespace indrep
