#pragma once

#include <map>
#include <string>

#include "indrep/finite_field.hpp"
#include "indrep/group.hpp"

namespace indrep {

struct Mat2 {
  FqField::E a = 1, b = 0, c = 0, d = 1;
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 mat_mul(const FqField& F, const Mat2& x, const Mat2& y);
Mat2 mat_inverse(const FqField& F, const Mat2& m);
FqField::E mat_det(const FqField& F, const Mat2& m);

/// Action M·v on the q^2-1 nonzero column vectors.
Permutation mat_to_permutation(const FqField& F, const Mat2& m);
Mat2 permutation_to_mat(const FqField& F, std::span<const Point> images);

/// Decomposes q as p^k; throws UnsupportedQ for non prime powers and q > 32.
FqField field_for_q(std::uint64_t q);

/// SL(2,q) and GL(2,q) on the same point set, with the named elements
/// 1, z, c, d, a, b (z and d only for odd q).
struct LinearGroups {
  FqField field;
  FiniteGroup sl;
  FiniteGroup gl;
  std::map<std::string, Mat2> named;
  /// Named elements as indices into sl.
  std::map<std::string, Elem> named_sl;
};

FiniteGroup sl2(std::uint64_t q);
FiniteGroup gl2(std::uint64_t q);
LinearGroups linear_groups(std::uint64_t q);

}  // namespace indrep
