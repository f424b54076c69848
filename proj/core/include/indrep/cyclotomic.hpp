#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace indrep {

/// Exact element of Q(zeta_n) in the power basis 1, x, ..., x^{phi(n)-1} of
/// Q[x]/Phi_n(x). Arithmetic lifts operands to the lcm of their conductors;
/// `canonical()` moves a value to its smallest field Q(zeta_d).
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_{mpq_class(0)} {}
  Cyclotomic(long v) : n_(1), c_{mpq_class(v)} {}  // NOLINT(implicit)
  Cyclotomic(int v) : n_(1), c_{mpq_class(v)} {}   // NOLINT(implicit)
  explicit Cyclotomic(const mpq_class& v) : n_(1), c_{v} {}

  /// zeta_n^k.
  static Cyclotomic zeta(std::uint32_t n, long long k = 1);
  /// Element of Q(zeta_n) from power-basis coefficients (length phi(n)).
  static Cyclotomic from_coeffs(std::uint32_t n, std::vector<mpq_class> coeffs);

  std::uint32_t conductor() const noexcept { return n_; }
  const std::vector<mpq_class>& coeffs() const noexcept { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws NotIntegral unless rational.
  mpq_class rational() const;
  bool is_integer() const;

  Cyclotomic lifted(std::uint32_t m) const;
  Cyclotomic canonical() const;
  Cyclotomic conj() const;
  /// Galois automorphism zeta -> zeta^k (k coprime to the conductor).
  Cyclotomic galois(long long k) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const mpq_class& s);
  Cyclotomic& operator/=(const mpq_class& s);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const mpq_class& s) { return a *= s; }
  friend Cyclotomic operator/(Cyclotomic a, const mpq_class& s) { return a /= s; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  Cyclotomic(std::uint32_t n, std::vector<mpq_class> c) : n_(n), c_(std::move(c)) {}
  void shrink_if_rational();

  std::uint32_t n_;
  std::vector<mpq_class> c_;
};

/// x^k mod Phi_n for 0 <= k < n, as machine integers.
const std::vector<std::vector<long long>>& integer_power_table(std::uint32_t n);

/// Phi_n as integer coefficients, low degree first.
std::vector<long long> cyclotomic_polynomial(std::uint32_t n);

/// Sum of k over the Legendre symbol (k/p) zeta_p^k; equals sqrt(p) for p = 1 mod 4.
Cyclotomic quadratic_gauss_sum(std::uint32_t p);

}  // namespace indrep
