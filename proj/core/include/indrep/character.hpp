#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "indrep/cyclotomic.hpp"
#include "indrep/group.hpp"

namespace indrep {

/// Class data a character needs, detached from the group.
struct ClassInfo {
  std::uint64_t group_order = 1;
  std::uint64_t exponent = 1;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> orders;
  std::vector<std::uint32_t> inverse;
  std::vector<std::vector<std::uint32_t>> power_map;

  std::size_t count() const noexcept { return sizes.size(); }
  std::uint32_t power(std::size_t cls, long long k) const;
  std::uint64_t centralizer_order(std::size_t cls) const { return group_order / sizes[cls]; }

  static std::shared_ptr<const ClassInfo> of(const FiniteGroup& G);
};

using ClassInfoPtr = std::shared_ptr<const ClassInfo>;

/// Class function with one exact value per conjugacy class.
struct Character {
  ClassInfoPtr classes;
  std::vector<Cyclotomic> values;

  long long degree() const;
  Character conj() const;
  bool is_real() const;
  const Cyclotomic& operator[](std::size_t k) const { return values[k]; }

  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character& operator*=(const mpq_class& s);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(Character a, const mpq_class& s) { return a *= s; }
  friend bool operator==(const Character& a, const Character& b) { return a.values == b.values; }
};

Character zero_character(ClassInfoPtr classes);
Character trivial_character(ClassInfoPtr classes);
Character regular_character(ClassInfoPtr classes);

/// (1/|G|) sum over g of a(g) conj(b(g)). Throws GroupMismatch for different class data.
Cyclotomic inner_product_value(const Character& a, const Character& b);
/// As above; throws NotIntegral when the value is not rational.
mpq_class inner_product(const Character& a, const Character& b);

/// Throws NotIrreducible unless the norm is 1.
int frobenius_schur(const Character& chi);

/// -1, 0, 1 for the ordering used on table rows: degree first, then values in
/// decreasing order (real part, then imaginary part).
int compare_characters(const Character& a, const Character& b);

struct OrthogonalityReport {
  bool rows = false;
  bool columns = false;
};
OrthogonalityReport check_orthogonality(const ClassInfo& info, const std::vector<Character>& chars);

class CharacterTable {
 public:
  /// Sorts the rows and verifies both orthogonality relations; throws InternalInconsistency otherwise.
  CharacterTable(ClassInfoPtr classes, std::vector<Character> irreducibles, std::uint64_t dixon_prime = 0);

  const ClassInfo& classes() const noexcept { return *classes_; }
  const ClassInfoPtr& class_info() const noexcept { return classes_; }
  std::size_t size() const noexcept { return irr_.size(); }
  const Character& operator[](std::size_t i) const { return irr_[i]; }
  const std::vector<Character>& irreducibles() const noexcept { return irr_; }
  std::vector<long long> degrees() const;
  /// Prime used by the Dixon computation, 0 for tables assembled otherwise.
  std::uint64_t dixon_prime() const noexcept { return prime_; }
  /// Row index of a character equal to chi, or -1.
  long find(const Character& chi) const;
  /// Multiplicities of the irreducibles in chi; throws NotIntegral if not a virtual character.
  std::vector<long long> decompose(const Character& chi) const;

 private:
  ClassInfoPtr classes_;
  std::vector<Character> irr_;
  std::uint64_t prime_;
};

struct DixonOptions {
  std::uint64_t prime_bound = 100'000'000;
};

/// Burnside-Dixon-Schneider: simultaneous eigenvectors of the class matrices
/// modulo a prime l = 1 mod exp(G), lifted to exact cyclotomic values.
CharacterTable character_table(const FiniteGroup& G, const DixonOptions& opts = {});

/// The Dixon prime: least l = 1 mod e with l > 2 sqrt(order).
std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent, std::uint64_t bound);

/// Table of P = direct_product(A, B) as outer products of the factor tables.
CharacterTable product_table(const FiniteGroup& P, const FiniteGroup& A, const CharacterTable& TA,
                             const FiniteGroup& B, const CharacterTable& TB);

/// Header with class orders and sizes, one row per character with exact
/// values and a trailing column of decimal approximations.
std::string table_tsv(const ClassInfo& info, const std::vector<Character>& chars,
                      const std::vector<std::string>& labels);

}  // namespace indrep
