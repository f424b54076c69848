#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace indrep {

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}; product `a * b` applies a first, then b.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds from disjoint cycles given with 0-based points.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles);

  /// Parses 1-based cycle notation such as "(1 2 3)(4 5)"; "()" is the identity.
  static Permutation parse(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::uint64_t order() const;

  std::vector<std::vector<std::size_t>> cycles() const;
  /// 1-based cycle notation, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

/// Throws InvalidPermutation unless images form a bijection of {0..n-1}.
void validate_images(std::span<const Point> images);

std::uint64_t permutation_order(std::span<const Point> images);

}  // namespace indrep
