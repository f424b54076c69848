#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "indrep/group.hpp"

namespace indrep {

/// A set of elements of a fixed group, as a bitset plus sorted member list.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), bits_((universe + 63) / 64, 0) {}
  static ElementSet from_elements(std::size_t universe, std::span<const Elem> elems);

  bool contains(Elem e) const { return (bits_[e >> 6] >> (e & 63)) & 1u; }
  bool insert(Elem e);
  std::size_t size() const noexcept { return elems_.size(); }
  std::size_t universe() const noexcept { return universe_; }
  /// Members in increasing index order.
  const std::vector<Elem>& elements() const;
  const std::vector<std::uint64_t>& bits() const noexcept { return bits_; }

  bool subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const ElementSet& a, const ElementSet& b) { return a.bits_ < b.bits_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> bits_;
  mutable std::vector<Elem> elems_;
  mutable bool sorted_ = true;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept;
};

/// A subgroup of an ambient FiniteGroup with a small generating set.
struct Subgroup {
  ElementSet set;
  std::vector<Elem> gens;

  std::size_t order() const noexcept { return set.size(); }
  bool contains(Elem e) const { return set.contains(e); }
  const std::vector<Elem>& elements() const { return set.elements(); }
};

Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup whole_group(const FiniteGroup& G);
Subgroup generate(const FiniteGroup& G, std::span<const Elem> gens);
/// Closure of H together with extra generators.
Subgroup extend(const FiniteGroup& G, const Subgroup& H, std::span<const Elem> extra);
Subgroup join(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);
Subgroup intersection(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);

/// Throws NotSubgroup unless the set is closed under products.
Subgroup subgroup_from_set(const FiniteGroup& G, const ElementSet& set);
/// Greedy generating set, taking elements in increasing index order.
std::vector<Elem> generating_set(const FiniteGroup& G, const ElementSet& set);

bool is_normal(const FiniteGroup& G, const Subgroup& H);
Subgroup normal_closure(const FiniteGroup& G, std::span<const Elem> seeds);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);
Subgroup conjugate(const FiniteGroup& G, const Subgroup& H, Elem g);
ElementSet conjugate_set(const FiniteGroup& G, const ElementSet& S, Elem g);
/// [A, B] for A, B normal in G.
Subgroup commutator(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);
bool is_abelian(const FiniteGroup& G, const Subgroup& H);
bool is_cyclic(const FiniteGroup& G, const Subgroup& H);
bool is_p_group(const Subgroup& H, std::uint64_t p);

/// All normal subgroups, as joins of normal closures of classes; sorted by order.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& G);
/// Smallest normal subgroup with quotient a p-group: generated by the p'-elements.
Subgroup o_p_residual(const FiniteGroup& G, std::uint64_t p);
/// Stable term of the lower central series.
Subgroup nilpotent_residual(const FiniteGroup& G);
bool is_nilpotent(const FiniteGroup& G);
bool is_solvable(const FiniteGroup& G);
Subgroup derived_subgroup(const FiniteGroup& G);

struct Quotient {
  FiniteGroup group;
  /// projection[e] is the image of e in the quotient.
  std::vector<Elem> projection;
};

/// Quotient by a normal subgroup, realized by the action on right cosets.
Quotient quotient_group(const FiniteGroup& G, const Subgroup& N, const GroupOptions& opts = {});

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B, const GroupOptions& opts = {});

struct Embedded {
  FiniteGroup group;
  /// into[h] is the ambient index of element h of `group`.
  std::vector<Elem> into;
};

/// Rebuilds a subgroup as a FiniteGroup on the same points.
Embedded as_group(const FiniteGroup& G, const Subgroup& H);

/// Order, class count, and sorted (element order, class size) pairs.
struct Fingerprint {
  std::size_t order = 0;
  std::size_t nclasses = 0;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> class_profile;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteGroup& G);

}  // namespace indrep
