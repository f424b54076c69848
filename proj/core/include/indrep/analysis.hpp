#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "indrep/character.hpp"
#include "indrep/lattice.hpp"
#include "indrep/real_characters.hpp"

namespace indrep {

struct AnalysisOptions {
  std::size_t lattice_cap = 2000;
  /// Skip the lattice entirely (families and lattice-based checks become unavailable).
  bool build_lattice = true;
};

/// Determinant data of g in N_G(P) acting on fixed spaces V^P: for each real
/// irreducible W_i, det(g | W_i^P) = zeta_order^exponent[i].
struct OrientationCheck {
  std::uint32_t subgroup_class = 0;
  Elem g = 0;
  std::uint32_t order = 1;
  std::vector<long long> exponent;
};

/// Everything the module-level checks need about one group, computed once.
class GroupAnalysis {
 public:
  explicit GroupAnalysis(GroupPtr G, const AnalysisOptions& opts = {});
  GroupAnalysis(GroupPtr G, CharacterTable table, const AnalysisOptions& opts = {});

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const CharacterTable& table() const noexcept { return table_; }
  const RealIrreducibles& real() const noexcept { return real_; }

  bool has_lattice() const noexcept { return lattice_.has_value(); }
  /// Throws LatticeCapExceeded when the lattice was not built.
  const SubgroupLattice& lattice() const;

  /// O^p(G) for each prime p dividing |G| (duplicates removed).
  const std::vector<std::pair<std::uint64_t, Subgroup>>& residuals() const noexcept { return residuals_; }
  /// Per G-class: order of the representative is 1 or a prime power.
  const std::vector<bool>& prime_power_classes() const noexcept { return pp_classes_; }

  std::vector<std::uint64_t> class_histogram(const ElementSet& K) const;
  /// dim W_i^K for every real irreducible W_i.
  std::vector<long long> irreducible_fixed_dims(const ElementSet& K) const;
  /// rows: real irreducibles, columns: lattice classes.
  const std::vector<std::vector<long long>>& fixed_dim_table() const;
  /// rows: real irreducibles, columns: residuals().
  const std::vector<std::vector<long long>>& residual_fixed_dims() const noexcept { return residual_dims_; }

  /// Checks for every lattice class in the family P and every generator of its normalizer.
  const std::vector<OrientationCheck>& orientation_checks() const;
  /// The same data for an arbitrary subgroup P (tagged with `tag`).
  std::vector<OrientationCheck> orientation_for(const Subgroup& P, std::uint32_t tag) const;

 private:
  void init(const AnalysisOptions& opts);

  GroupPtr group_;
  CharacterTable table_;
  RealIrreducibles real_;
  std::optional<SubgroupLattice> lattice_;
  std::vector<std::pair<std::uint64_t, Subgroup>> residuals_;
  std::vector<bool> pp_classes_;
  std::vector<std::vector<long long>> lattice_dims_;
  std::vector<std::vector<long long>> residual_dims_;
  std::uint64_t prime_ = 0;
  std::uint64_t zeta_mod_ = 0;
  /// Real irreducible values reduced modulo prime_ with zeta_e -> zeta_mod_.
  std::vector<std::vector<std::uint64_t>> values_mod_;
  mutable std::once_flag orient_once_;
  mutable std::vector<OrientationCheck> orient_;
};

using AnalysisPtr = std::shared_ptr<const GroupAnalysis>;

}  // namespace indrep
