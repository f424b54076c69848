#include "indrep/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "indrep/error.hpp"
#include "indrep/number_theory.hpp"

namespace indrep {

namespace {

struct Context {
  std::uint32_t n = 1;
  std::size_t phi = 1;
  std::vector<long long> Phi;
  /// pow[k] = x^k mod Phi_n for 0 <= k < n.
  std::vector<std::vector<mpz_class>> pow;
};

struct Projection {
  std::vector<std::size_t> rows;
  std::vector<std::vector<mpq_class>> inverse;
};

std::mutex registry_mutex;
std::map<std::uint32_t, std::unique_ptr<Context>> contexts;
std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Projection>> projections;
std::map<std::uint32_t, std::vector<long long>> phi_cache;

std::vector<long long> phi_poly_locked(std::uint32_t n) {
  if (auto it = phi_cache.find(n); it != phi_cache.end()) return it->second;
  // x^n - 1 divided by Phi_d for proper divisors d
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (auto d : divisors(n)) {
    if (d == n) continue;
    auto den = phi_poly_locked(static_cast<std::uint32_t>(d));
    std::vector<long long> quo(num.size() - den.size() + 1, 0);
    for (std::size_t i = quo.size(); i-- > 0;) {
      long long c = num[i + den.size() - 1];
      quo[i] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    num = std::move(quo);
  }
  phi_cache[n] = num;
  return num;
}

const Context& context(std::uint32_t n) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto& slot = contexts[n];
  if (slot) return *slot;
  auto ctx = std::make_unique<Context>();
  ctx->n = n;
  ctx->Phi = phi_poly_locked(n);
  ctx->phi = ctx->Phi.size() - 1;
  const std::size_t phi = ctx->phi;
  ctx->pow.resize(n);
  std::vector<mpz_class> v(phi, 0);
  v[0] = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    ctx->pow[k] = v;
    mpz_class top = v[phi - 1];
    for (std::size_t i = phi; i-- > 1;) v[i] = v[i - 1] - top * static_cast<long>(ctx->Phi[i]);
    v[0] = -top * static_cast<long>(ctx->Phi[0]);
  }
  slot = std::move(ctx);
  return *slot;
}

const Projection& projection(std::uint32_t n, std::uint32_t d) {
  const Context& cn = context(n);
  const Context& cd = context(d);
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto& slot = projections[{n, d}];
  if (slot) return *slot;
  const std::size_t pn = cn.phi, pd = cd.phi;
  const std::uint32_t step = n / d;
  // M[r][j] = coefficient r of zeta_d^j lifted to Q(zeta_n)
  std::vector<std::vector<mpq_class>> M(pn, std::vector<mpq_class>(pd));
  for (std::size_t j = 0; j < pd; ++j) {
    const auto& col = cn.pow[(j * step) % n];
    for (std::size_t r = 0; r < pn; ++r) M[r][j] = col[r];
  }
  auto proj = std::make_unique<Projection>();
  std::vector<std::vector<mpq_class>> basis;  // echelon rows of selected rows
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < pn && proj->rows.size() < pd; ++r) {
    auto row = M[r];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (row[pivots[b]] == 0) continue;
      mpq_class f = row[pivots[b]];
      for (std::size_t j = 0; j < pd; ++j) row[j] -= f * basis[b][j];
    }
    std::size_t piv = pd;
    for (std::size_t j = 0; j < pd; ++j)
      if (row[j] != 0) {
        piv = j;
        break;
      }
    if (piv == pd) continue;
    mpq_class inv = 1 / row[piv];
    for (auto& x : row) x *= inv;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (basis[b][piv] == 0) continue;
      mpq_class f = basis[b][piv];
      for (std::size_t j = 0; j < pd; ++j) basis[b][j] -= f * row[j];
    }
    basis.push_back(std::move(row));
    pivots.push_back(piv);
    proj->rows.push_back(r);
  }
  // invert the selected square block by Gauss-Jordan
  std::vector<std::vector<mpq_class>> A(pd, std::vector<mpq_class>(2 * pd));
  for (std::size_t i = 0; i < pd; ++i) {
    for (std::size_t j = 0; j < pd; ++j) A[i][j] = M[proj->rows[i]][j];
    A[i][pd + i] = 1;
  }
  for (std::size_t c = 0; c < pd; ++c) {
    std::size_t p = c;
    while (A[p][c] == 0) ++p;
    std::swap(A[p], A[c]);
    mpq_class inv = 1 / A[c][c];
    for (auto& x : A[c]) x *= inv;
    for (std::size_t i = 0; i < pd; ++i) {
      if (i == c || A[i][c] == 0) continue;
      mpq_class f = A[i][c];
      for (std::size_t j = 0; j < 2 * pd; ++j) A[i][j] -= f * A[c][j];
    }
  }
  proj->inverse.assign(pd, std::vector<mpq_class>(pd));
  for (std::size_t i = 0; i < pd; ++i)
    for (std::size_t j = 0; j < pd; ++j) proj->inverse[i][j] = A[i][pd + j];
  slot = std::move(proj);
  return *slot;
}

std::map<std::uint32_t, std::unique_ptr<std::vector<std::vector<long long>>>> int_tables;

}  // namespace

const std::vector<std::vector<long long>>& integer_power_table(std::uint32_t n) {
  const Context& c = context(n);
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto& slot = int_tables[n];
  if (!slot) {
    auto t = std::make_unique<std::vector<std::vector<long long>>>(n, std::vector<long long>(c.phi));
    for (std::uint32_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < c.phi; ++i) {
        if (!c.pow[k][i].fits_slong_p()) throw Error(ErrorCode::InternalInconsistency, "reduction table overflow");
        (*t)[k][i] = c.pow[k][i].get_si();
      }
    slot = std::move(t);
  }
  return *slot;
}

std::vector<long long> cyclotomic_polynomial(std::uint32_t n) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  return phi_poly_locked(n);
}

Cyclotomic Cyclotomic::zeta(std::uint32_t n, long long k) {
  if (n == 0) throw Error(ErrorCode::InternalInconsistency, "conductor must be positive");
  const Context& c = context(n);
  long long r = ((k % n) + n) % n;
  std::vector<mpq_class> v(c.phi);
  for (std::size_t i = 0; i < c.phi; ++i) v[i] = c.pow[r][i];
  Cyclotomic z(n, std::move(v));
  z.shrink_if_rational();
  return z;
}

Cyclotomic Cyclotomic::from_coeffs(std::uint32_t n, std::vector<mpq_class> coeffs) {
  const Context& c = context(n);
  if (coeffs.size() != c.phi) throw Error(ErrorCode::InternalInconsistency, "coefficient count differs from phi(n)");
  Cyclotomic z(n, std::move(coeffs));
  z.shrink_if_rational();
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class Cyclotomic::rational() const {
  if (!is_rational()) throw Error(ErrorCode::NotIntegral, "value " + to_string() + " is not rational");
  return c_[0];
}

bool Cyclotomic::is_integer() const { return is_rational() && c_[0].get_den() == 1; }

void Cyclotomic::shrink_if_rational() {
  if (n_ != 1 && is_rational()) {
    mpq_class v = c_[0];
    n_ = 1;
    c_.assign(1, v);
  }
}

Cyclotomic Cyclotomic::lifted(std::uint32_t m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw Error(ErrorCode::InternalInconsistency, "lift target is not a multiple of the conductor");
  const Context& cm = context(m);
  const std::uint32_t step = m / n_;
  std::vector<mpq_class> v(cm.phi, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& col = cm.pow[(i * step) % m];
    for (std::size_t r = 0; r < cm.phi; ++r)
      if (col[r] != 0) v[r] += c_[i] * col[r];
  }
  return Cyclotomic(m, std::move(v));
}

Cyclotomic Cyclotomic::canonical() const {
  if (is_rational()) return Cyclotomic(c_[0]);
  for (auto d64 : divisors(n_)) {
    auto d = static_cast<std::uint32_t>(d64);
    if (d <= 2 || d % 4 == 2) continue;
    if (d == n_) return *this;
    const Projection& P = projection(n_, d);
    const std::size_t pd = P.rows.size();
    std::vector<mpq_class> b(pd, 0);
    for (std::size_t i = 0; i < pd; ++i)
      for (std::size_t j = 0; j < pd; ++j)
        if (P.inverse[i][j] != 0) b[i] += P.inverse[i][j] * c_[P.rows[j]];
    Cyclotomic cand(d, std::move(b));
    if (cand.lifted(n_).c_ == c_) return cand;
  }
  return *this;
}

Cyclotomic Cyclotomic::galois(long long k) const {
  if (n_ <= 2) return *this;
  long long kk = ((k % n_) + n_) % n_;
  if (std::gcd<long long, long long>(kk, n_) != 1)
    throw Error(ErrorCode::InternalInconsistency, "Galois exponent not coprime to conductor");
  const Context& c = context(n_);
  std::vector<mpq_class> v(c.phi, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& col = c.pow[(i * kk) % n_];
    for (std::size_t r = 0; r < c.phi; ++r)
      if (col[r] != 0) v[r] += c_[i] * col[r];
  }
  return Cyclotomic(n_, std::move(v));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<long double> s = 0;
  const long double two_pi = 6.283185307179586476925286766559L;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long double ang = two_pi * static_cast<long double>(i) / static_cast<long double>(n_);
    s += static_cast<long double>(c_[i].get_d()) * std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

std::string Cyclotomic::to_string() const {
  Cyclotomic c = canonical();
  if (c.n_ == 1) return c.c_[0].get_str();
  std::string s;
  for (std::size_t i = 0; i < c.c_.size(); ++i) {
    const mpq_class& x = c.c_[i];
    if (x == 0) continue;
    std::string mag;
    mpq_class ax = abs(x);
    if (i == 0) {
      mag = ax.get_str();
    } else {
      mag = (ax == 1 ? std::string() : ax.get_str() + "*") + "E" + std::to_string(c.n_) + "^" + std::to_string(i);
    }
    if (x < 0) {
      s += "-";
    } else if (!s.empty()) {
      s += "+";
    }
    s += mag;
  }
  return s;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  std::uint32_t m = std::lcm(n_, o.n_);
  if (m != n_) *this = lifted(m);
  if (o.n_ == m) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else {
    Cyclotomic l = o.lifted(m);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += l.c_[i];
  }
  shrink_if_rational();
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const mpq_class& s) {
  for (auto& x : c_) x *= s;
  shrink_if_rational();
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const mpq_class& s) {
  if (s == 0) throw Error(ErrorCode::InternalInconsistency, "division by zero");
  for (auto& x : c_) x /= s;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ == 1) return *this *= o.c_[0];
  if (n_ == 1) {
    mpq_class s = c_[0];
    *this = o;
    return *this *= s;
  }
  std::uint32_t m = std::lcm(n_, o.n_);
  Cyclotomic a = lifted(m), b = o.lifted(m);
  const Context& c = context(m);
  const std::size_t phi = c.phi;
  std::vector<mpq_class> prod(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  std::vector<mpq_class> v(prod.begin(), prod.begin() + phi);
  for (std::size_t k = phi; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& col = c.pow[k % m];
    for (std::size_t r = 0; r < phi; ++r)
      if (col[r] != 0) v[r] += prod[k] * col[r];
  }
  n_ = m;
  c_ = std::move(v);
  shrink_if_rational();
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  std::uint32_t m = std::lcm(a.n_, b.n_);
  return a.lifted(m).c_ == b.lifted(m).c_;
}

Cyclotomic quadratic_gauss_sum(std::uint32_t p) {
  if (!is_prime(p) || p == 2) throw Error(ErrorCode::NotPrime, "odd prime required");
  Cyclotomic s;
  for (std::uint32_t k = 1; k < p; ++k) {
    bool residue = powmod(k, (p - 1) / 2, p) == 1;
    Cyclotomic z = Cyclotomic::zeta(p, k);
    if (residue) {
      s += z;
    } else {
      s -= z;
    }
  }
  return s;
}

}  // namespace indrep
