#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indrep/character.hpp"

namespace indrep {

enum class RealKind { Real, ComplexPair, Quaternionic };

const char* real_kind_name(RealKind k);

struct RealIrreducible {
  Character chi;
  RealKind kind = RealKind::Real;
  /// Indicator of the source complex character.
  int indicator = 1;
  /// Row of the source in the complex table; the partner row for complex pairs.
  std::size_t source = 0;
  std::optional<std::size_t> partner;
  /// Canonical label V{degree}{letter}, e.g. V3a.
  std::string label;

  long long degree() const { return chi.degree(); }
  /// <chi, chi>: 1, 2 or 4 by kind.
  long norm() const { return kind == RealKind::Real ? 1 : kind == RealKind::ComplexPair ? 2 : 4; }
};

class RealIrreducibles {
 public:
  explicit RealIrreducibles(const CharacterTable& table);

  std::size_t size() const noexcept { return list_.size(); }
  const RealIrreducible& operator[](std::size_t i) const { return list_[i]; }
  const std::vector<RealIrreducible>& list() const noexcept { return list_; }
  const ClassInfoPtr& class_info() const noexcept { return classes_; }
  std::vector<std::string> labels() const;
  std::optional<std::size_t> index_of(const std::string& label) const;
  /// Coefficients of a real virtual character; throws NotIntegral otherwise.
  std::vector<long long> decompose(const Character& chi) const;
  /// Sum of coeff[i] times the i-th real irreducible.
  Character combine(const std::vector<long long>& coeffs) const;

 private:
  ClassInfoPtr classes_;
  std::vector<RealIrreducible> list_;
};

inline RealIrreducibles real_irreducibles(const CharacterTable& table) { return RealIrreducibles(table); }

/// Letters for the i-th label of a given degree: a, b, ..., z, aa, ab, ...
std::string label_suffix(std::size_t i);

}  // namespace indrep
