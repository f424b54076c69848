#include "indrep/finite_field.hpp"

#include "indrep/error.hpp"
#include "indrep/number_theory.hpp"

namespace indrep {

namespace {

using Poly = std::vector<unsigned>;  // low degree first, over Z/p

Poly decode(std::uint64_t code, unsigned len, std::uint64_t p) {
  Poly c(len);
  for (unsigned i = 0; i < len; ++i) {
    c[i] = static_cast<unsigned>(code % p);
    code /= p;
  }
  return c;
}

// remainder of a modulo monic m
Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    unsigned c = a[i] % p;
    if (!c) continue;
    for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] = static_cast<unsigned>((a[i - dm + j] + (p - c) * m[j]) % p);
  }
  a.resize(dm);
  return a;
}

bool is_irreducible(const Poly& m, std::uint64_t p) {
  const unsigned k = static_cast<unsigned>(m.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly f = decode(code, d, p);
      f.push_back(1);
      Poly r = poly_mod(m, f, p);
      bool zero = true;
      for (auto c : r)
        if (c) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

FqField FqField::build(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  if (k < 1) throw Error(ErrorCode::DegreeTooLarge, "extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > 256) throw Error(ErrorCode::DegreeTooLarge, "field order above 256");
  }
  FqField F;
  F.p_ = p;
  F.k_ = k;
  F.q_ = q;
  if (k == 1) {
    F.modulus_ = {0, 1};
  } else {
    std::uint64_t count = q;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly m = decode(code, k, p);
      m.push_back(1);
      if (m[0] != 0 && is_irreducible(m, p)) {
        F.modulus_ = m;
        break;
      }
    }
  }
  F.add_.resize(q * q);
  F.mul_.resize(q * q);
  F.neg_.resize(q);
  for (std::uint64_t a = 0; a < q; ++a) {
    Poly pa = decode(a, k, p);
    Poly na(k);
    for (unsigned i = 0; i < k; ++i) na[i] = static_cast<unsigned>((p - pa[i]) % p);
    std::uint64_t code = 0;
    for (unsigned i = k; i-- > 0;) code = code * p + na[i];
    F.neg_[a] = static_cast<E>(code);
    for (std::uint64_t b = 0; b < q; ++b) {
      Poly pb = decode(b, k, p);
      std::uint64_t s = 0;
      for (unsigned i = k; i-- > 0;) s = s * p + (pa[i] + pb[i]) % p;
      F.add_[a * q + b] = static_cast<E>(s);
      Poly prod(2 * k, 0);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) prod[i + j] = static_cast<unsigned>((prod[i + j] + pa[i] * pb[j]) % p);
      Poly r = k == 1 ? Poly{static_cast<unsigned>(prod[0] % p)} : poly_mod(prod, F.modulus_, p);
      std::uint64_t m = 0;
      for (unsigned i = k; i-- > 0;) m = m * p + r[i];
      F.mul_[a * q + b] = static_cast<E>(m);
    }
  }
  F.inv_.assign(q, 0);
  for (std::uint64_t a = 1; a < q; ++a)
    for (std::uint64_t b = 1; b < q; ++b)
      if (F.mul_[a * q + b] == 1) F.inv_[a] = static_cast<E>(b);
  for (std::uint64_t a = 1; a < q; ++a)
    if (F.mult_order(static_cast<E>(a)) == q - 1) {
      F.nu_ = static_cast<E>(a);
      break;
    }
  if (F.mult_order(F.nu_) != q - 1) throw Error(ErrorCode::InternalInconsistency, "no generator of the unit group");
  return F;
}

FqField::E FqField::inv(E a) const {
  if (a == 0) throw Error(ErrorCode::InternalInconsistency, "inverse of zero in finite field");
  return inv_[a];
}

FqField::E FqField::pow(E a, long long n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  E r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

std::uint64_t FqField::mult_order(E a) const {
  if (a == 0) return 0;
  std::uint64_t n = 1;
  for (E x = a; x != 1; x = mul(x, a)) ++n;
  return n;
}

FqField::E FqField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += static_cast<long long>(p_);
  return static_cast<E>(r);
}

std::string FqField::name(E a) const {
  if (k_ == 1) return std::to_string(a);
  Poly c = decode(a, k_, p_);
  std::string s;
  for (unsigned i = k_; i-- > 0;) {
    if (!c[i]) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
    if (i >= 1) s += (i == 0 || c[i] != 1 ? "*x" : "x");
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::string FqField::modulus_string() const {
  std::string s;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    unsigned c = modulus_[i];
    if (!c) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c) + "*";
    s += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return s;
}

}  // namespace indrep
