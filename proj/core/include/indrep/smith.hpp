#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indrep/analysis.hpp"
#include "indrep/induction.hpp"
#include "indrep/module.hpp"

namespace indrep {

/// dim V^K for a lattice class K.
long long fixed_dim(const GroupAnalysis& A, const VirtualModule& V, std::uint32_t lattice_class);
/// dim V^K for an arbitrary subgroup.
long long fixed_dim(const GroupAnalysis& A, const VirtualModule& V, const ElementSet& K);
/// One row per module, one column per lattice class.
std::vector<std::vector<long long>> fixed_dim_table(const GroupAnalysis& A, const std::vector<VirtualModule>& modules);

struct PoResult {
  bool member = true;
  /// First G-class of prime-power order where the characters differ.
  std::optional<std::uint32_t> witness_class;
};

PoResult po_member(const GroupAnalysis& A, const VirtualModule& U, const VirtualModule& V);
bool reduced_po_member(const GroupAnalysis& A, const VirtualModule& U, const VirtualModule& V);

enum class GapMode { Weak, Strong };

struct PairCheck {
  bool pass = true;
  /// Lattice classes (P, H) or (H, K) of the first violation.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
};

/// Weak: dim V^P >= 2 dim V^H; strong: dim V^P > 2 dim V^H; for P in the family P and P < H.
PairCheck gap_check(const GroupAnalysis& A, const VirtualModule& V, GapMode mode);

struct ClassCheck {
  bool pass = true;
  std::optional<std::uint32_t> witness;
};

/// dim V^P >= 5 on the family P and dim V^H >= 2 on the pseudocyclic family.
ClassCheck dims_check(const GroupAnalysis& A, const VirtualModule& V);
/// Every pseudocyclic H is an isotropy subgroup: the fixed dimension drops strictly at each <H, g>.
PairCheck isotropy_check(const GroupAnalysis& A, const VirtualModule& V);
/// V^{O^p(G)} = 0 for every p, hence V^L = 0 on the large family.
ClassCheck large_vanishing(const GroupAnalysis& A, const VirtualModule& V);

struct OrientationResult {
  bool oriented = true;
  /// Lattice class of P and the element g of N_G(P) reversing orientation.
  std::optional<std::pair<std::uint32_t, Elem>> witness;
};

OrientationResult p_oriented(const GroupAnalysis& A, const VirtualModule& V);

struct ConditionResult {
  int number = 0;
  std::string name;
  bool pass = true;
  std::string witness;
};

struct SmithReport {
  std::vector<ConditionResult> conditions;
  OrientationResult oriented_U, oriented_V;
  long long dim_U = 0, dim_V = 0;
  bool isomorphic = false;

  bool matched() const;
  /// Smith matched and, unless waived, both modules oriented.
  bool overall(bool waive_orientability = false) const;
};

SmithReport smith_matched(const GroupAnalysis& A, const VirtualModule& U, const VirtualModule& V);

/// Induction of a module along a normal subgroup given by its embedding.
VirtualModule induce_module(const GroupAnalysis& G, const GroupAnalysis& N, const Embedded& emb, const Fusion& f,
                            const VirtualModule& V);

/// Real classes whose elements have order divisible by two primes.
std::size_t prim(const FiniteGroup& G);
/// Real classes of G/N containing an image of an element of G not of prime-power order.
std::size_t prim_bar(const FiniteGroup& G, const Subgroup& N);

struct PoRanks {
  std::size_t prim = 0;
  std::size_t rank_po = 0;
  std::size_t rank_reduced = 0;
  std::size_t rank_reduced_L = 0;
  /// beta'(G/G^nil) and prim(G) - beta'(G/G^nil).
  std::size_t beta_nil = 0;
  long long bound = 0;
  std::size_t prim_bar_nil = 0;
};

PoRanks po_lattice_ranks(const GroupAnalysis& A);

/// Real irreducibles W with W^{O^p(G)} = 0 for all p.
std::vector<std::size_t> large_vanishing_support(const GroupAnalysis& A);

/// Rational coordinates of the values on prime-power real classes; one column per support entry.
QMatrix po_constraint_matrix(const GroupAnalysis& A, const std::vector<std::size_t>& support);

}  // namespace indrep
