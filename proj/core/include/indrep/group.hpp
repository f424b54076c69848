#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "indrep/permutation.hpp"

namespace indrep {

/// Index of an element in the enumeration of its group; 0 is the identity.
using Elem = std::uint32_t;

struct GroupOptions {
  std::size_t max_order = 1'000'000;
  /// Full multiplication table is kept when the order does not exceed this.
  std::size_t cayley_limit = 2500;
};

struct ConjugacyClasses {
  std::vector<Elem> reps;
  std::vector<std::uint32_t> class_of;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> orders;
  std::vector<std::uint32_t> inverse;
  /// power_map[i][k] is the class of reps[i]^k for 0 <= k < orders[i].
  std::vector<std::vector<std::uint32_t>> power_map;
  std::vector<std::vector<Elem>> members;

  std::size_t count() const noexcept { return reps.size(); }
  std::uint32_t power(std::size_t cls, long long k) const;
};

struct RealClasses {
  /// Each real class is {i} or {i, inverse(i)} with i < inverse(i).
  std::vector<std::vector<std::uint32_t>> members;
  std::vector<Elem> reps;
  std::vector<std::uint32_t> real_of_class;

  std::size_t count() const noexcept { return members.size(); }
};

class FiniteGroup {
 public:
  static FiniteGroup build(std::size_t degree, std::vector<Permutation> generators, const GroupOptions& opts = {});

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return order_; }
  std::uint64_t exponent() const noexcept { return exponent_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Elem>& generator_elems() const noexcept { return generator_elems_; }

  std::span<const Point> images(Elem e) const { return {perms_.data() + std::size_t(e) * degree_, degree_}; }
  Permutation element(Elem e) const;

  static constexpr Elem identity() noexcept { return 0; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, long long k) const;
  /// g^-1 x g.
  Elem conj(Elem x, Elem g) const { return mul(mul(inverse_[g], x), g); }
  Elem conj_by_generator(Elem x, std::size_t j) const;
  /// Generator indices w with e = g_{w[0]} * g_{w[1]} * ...
  std::vector<std::uint16_t> word(Elem e) const;

  std::optional<Elem> find(std::span<const Point> images) const;
  /// Throws ElementNotInGroup when p is not an element.
  Elem index_of(const Permutation& p) const;

  std::uint32_t elem_order(Elem e) const { return elem_orders_[e]; }
  /// Lexicographic order of image arrays.
  bool lex_less(Elem a, Elem b) const;

  const ConjugacyClasses& classes() const noexcept { return classes_; }
  const RealClasses& real_classes() const noexcept { return real_; }
  std::size_t nclasses() const noexcept { return classes_.count(); }
  std::size_t nrealclasses() const noexcept { return real_.count(); }
  std::uint32_t class_of(Elem e) const { return classes_.class_of[e]; }
  std::uint64_t centralizer_order(Elem e) const { return order_ / classes_.sizes[classes_.class_of[e]]; }

  bool has_cayley_table() const noexcept { return !cayley_.empty(); }
  std::string describe() const;

 private:
  FiniteGroup() = default;
  void enumerate(const GroupOptions& opts);
  void build_cayley();
  void compute_classes();
  Elem insert_or_find(std::span<const Point> images, bool& inserted);
  std::size_t slot_for(std::span<const Point> images) const;

  std::size_t degree_ = 0;
  std::size_t order_ = 0;
  std::uint64_t exponent_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Elem> generator_elems_;
  std::vector<Point> perms_;
  std::vector<std::uint32_t> slots_;
  std::vector<Elem> parent_;
  std::vector<std::uint16_t> parent_gen_;
  std::vector<Elem> right_gen_;
  std::vector<Elem> left_gen_inv_;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> elem_orders_;
  std::vector<Elem> cayley_;
  ConjugacyClasses classes_;
  RealClasses real_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

}  // namespace indrep
