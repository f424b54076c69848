#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace indrep {

/// GF(p^k) with elements 0..q-1 encoding coefficient vectors in base p.
class FqField {
 public:
  using E = std::uint16_t;

  /// Uses the lexicographically least monic irreducible of degree k.
  static FqField build(std::uint64_t p, unsigned k);

  std::uint64_t p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  std::size_t q() const noexcept { return q_; }
  /// Coefficients c_0..c_k of the modulus (c_k = 1).
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
  E nu() const noexcept { return nu_; }

  E zero() const noexcept { return 0; }
  E one() const noexcept { return 1; }
  E add(E a, E b) const { return add_[a * q_ + b]; }
  E sub(E a, E b) const { return add_[a * q_ + neg_[b]]; }
  E neg(E a) const { return neg_[a]; }
  E mul(E a, E b) const { return mul_[a * q_ + b]; }
  E inv(E a) const;
  E pow(E a, long long n) const;
  std::uint64_t mult_order(E a) const;
  E from_int(long long n) const;

  std::string name(E a) const;
  std::string modulus_string() const;

 private:
  std::uint64_t p_ = 2;
  unsigned k_ = 1;
  std::size_t q_ = 2;
  std::vector<unsigned> modulus_;
  std::vector<E> add_, mul_, neg_, inv_;
  E nu_ = 1;
};

}  // namespace indrep
