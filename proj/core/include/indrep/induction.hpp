#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indrep/character.hpp"
#include "indrep/linalg.hpp"
#include "indrep/real_characters.hpp"
#include "indrep/subgroup.hpp"

namespace indrep {

/// Class and real-class fusion of a subgroup H (given as an embedded group) into G.
struct Fusion {
  std::vector<std::uint32_t> classes;
  std::vector<std::uint32_t> real_classes;
  /// a, a': G-classes (real classes) meeting H; b, b': classes (real classes) of H.
  std::size_t a = 0, b = 0, a_real = 0, b_real = 0;
};

Fusion class_fusion(const FiniteGroup& G, const Embedded& H);

struct MonoVerdict {
  bool mono = true;
  /// Lexicographically least h in H (ambient index) whose class in G meets another class of H.
  std::optional<Elem> witness;
  /// The H-classes sharing the witness's G-class.
  std::vector<std::uint32_t> merged;
};

/// (h)_G meets H exactly in (h)_H for every h in H.
MonoVerdict mono_complex(const FiniteGroup& G, const Embedded& H, const Fusion& f);
/// The same with real classes (h)^+-.
MonoVerdict mono_real(const FiniteGroup& G, const Embedded& H, const Fusion& f);

/// Induced class function, from values on H-classes.
Character induce_character(const ClassInfoPtr& G_classes, const Fusion& f, const Character& chi);
Character restrict_character(const ClassInfoPtr& H_classes, const Fusion& f, const Character& psi);

struct InductionMap {
  Fusion fusion;
  /// Rows: irreducibles of H; columns: irreducibles of G.
  ZMatrix complex;
  ZMatrix real;
  std::size_t rank_complex = 0;
  std::size_t rank_real = 0;
  /// Ranks modulo the two check primes, complex then real.
  std::vector<std::size_t> modular_ranks;
  std::vector<std::uint64_t> check_primes;

  bool complex_full() const { return rank_complex == complex.size(); }
  bool real_full() const { return rank_real == real.size(); }
};

InductionMap induction_map(const FiniteGroup& G, const CharacterTable& TG, const RealIrreducibles& RG,
                           const Embedded& H, const CharacterTable& TH, const RealIrreducibles& RH);

/// The two primes used to cross-check ranks, drawn from a fixed seed.
std::vector<std::uint64_t> rank_check_primes();

}  // namespace indrep
