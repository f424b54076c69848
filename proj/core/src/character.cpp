#include "indrep/character.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "indrep/error.hpp"
#include "indrep/number_theory.hpp"

namespace indrep {

using u64 = std::uint64_t;

std::uint32_t ClassInfo::power(std::size_t cls, long long k) const {
  const long long o = orders[cls];
  long long r = k % o;
  if (r < 0) r += o;
  return power_map[cls][static_cast<std::size_t>(r)];
}

ClassInfoPtr ClassInfo::of(const FiniteGroup& G) {
  auto info = std::make_shared<ClassInfo>();
  const auto& cc = G.classes();
  info->group_order = G.order();
  info->exponent = G.exponent();
  info->sizes = cc.sizes;
  info->orders = cc.orders;
  info->inverse = cc.inverse;
  info->power_map = cc.power_map;
  return info;
}

// ---------------------------------------------------------------- Character

long long Character::degree() const {
  mpq_class d = values.at(0).rational();
  if (d.get_den() != 1 || !d.get_num().fits_slong_p()) throw Error(ErrorCode::NotIntegral, "degree is not an integer");
  return d.get_num().get_si();
}

Character Character::conj() const {
  Character r{classes, {}};
  r.values.reserve(values.size());
  for (const auto& v : values) r.values.push_back(v.conj());
  return r;
}

bool Character::is_real() const {
  return std::all_of(values.begin(), values.end(), [](const Cyclotomic& v) { return v == v.conj(); });
}

namespace {

void check_same(const Character& a, const Character& b) {
  if (a.values.size() != b.values.size() ||
      (a.classes && b.classes && a.classes != b.classes &&
       (a.classes->group_order != b.classes->group_order || a.classes->sizes != b.classes->sizes)))
    throw Error(ErrorCode::GroupMismatch, "characters belong to different groups");
}

}  // namespace

Character& Character::operator+=(const Character& o) {
  check_same(*this, o);
  for (std::size_t k = 0; k < values.size(); ++k) values[k] += o.values[k];
  return *this;
}

Character& Character::operator-=(const Character& o) {
  check_same(*this, o);
  for (std::size_t k = 0; k < values.size(); ++k) values[k] -= o.values[k];
  return *this;
}

Character& Character::operator*=(const mpq_class& s) {
  for (auto& v : values) v *= s;
  return *this;
}

Character zero_character(ClassInfoPtr classes) {
  const std::size_t r = classes->count();
  return Character{std::move(classes), std::vector<Cyclotomic>(r)};
}

Character trivial_character(ClassInfoPtr classes) {
  const std::size_t r = classes->count();
  return Character{std::move(classes), std::vector<Cyclotomic>(r, Cyclotomic(1))};
}

Character regular_character(ClassInfoPtr classes) {
  Character c = zero_character(classes);
  c.values[0] = Cyclotomic(mpq_class(mpz_class(static_cast<unsigned long>(classes->group_order))));
  return c;
}

Cyclotomic inner_product_value(const Character& a, const Character& b) {
  check_same(a, b);
  const ClassInfo& info = *(a.classes ? a.classes : b.classes);
  Cyclotomic sum;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    if (a.values[k].is_zero() || b.values[k].is_zero()) continue;
    Cyclotomic t = a.values[k] * b.values[k].conj();
    t *= mpq_class(mpz_class(static_cast<unsigned long>(info.sizes[k])));
    sum += t;
  }
  return sum / mpq_class(mpz_class(static_cast<unsigned long>(info.group_order)));
}

mpq_class inner_product(const Character& a, const Character& b) { return inner_product_value(a, b).rational(); }

int frobenius_schur(const Character& chi) {
  if (inner_product_value(chi, chi) != Cyclotomic(1)) throw Error(ErrorCode::NotIrreducible, "character norm is not 1");
  const ClassInfo& info = *chi.classes;
  Cyclotomic sum;
  for (std::size_t k = 0; k < info.count(); ++k)
    sum += chi.values[info.power(k, 2)] * mpq_class(mpz_class(static_cast<unsigned long>(info.sizes[k])));
  mpq_class v = (sum / mpq_class(mpz_class(static_cast<unsigned long>(info.group_order)))).rational();
  if (v != 1 && v != 0 && v != -1) throw Error(ErrorCode::InternalInconsistency, "indicator outside {-1,0,1}");
  return static_cast<int>(v.get_num().get_si());
}

namespace {

int compare_value(const Cyclotomic& x, const Cyclotomic& y) {
  if (x == y) return 0;
  const auto cx = x.to_complex(), cy = y.to_complex();
  constexpr double tol = 1e-9;
  if (std::abs(cx.real() - cy.real()) > tol) return cx.real() < cy.real() ? -1 : 1;
  if (std::abs(cx.imag() - cy.imag()) > tol) return cx.imag() < cy.imag() ? -1 : 1;
  const std::uint32_t m = static_cast<std::uint32_t>(lcm_u64(x.conductor(), y.conductor()));
  const auto a = x.lifted(m).coeffs(), b = y.lifted(m).coeffs();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace

int compare_characters(const Character& a, const Character& b) {
  const long long da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    int c = compare_value(a.values[k], b.values[k]);
    if (c != 0) return -c;
  }
  return 0;
}

// ------------------------------------------------------------- orthogonality

namespace {

using IntVal = std::vector<long long>;

// Integer power-basis coefficients in Q(zeta_e); false if some value is not integral.
bool to_int_values(const std::vector<Character>& chars, std::uint32_t e, bool conj,
                   std::vector<std::vector<IntVal>>& out) {
  out.assign(chars.size(), {});
  for (std::size_t a = 0; a < chars.size(); ++a) {
    out[a].reserve(chars[a].values.size());
    for (const auto& v : chars[a].values) {
      const Cyclotomic w = (conj ? v.conj() : v).lifted(e);
      IntVal iv(w.coeffs().size());
      for (std::size_t i = 0; i < iv.size(); ++i) {
        const mpq_class& c = w.coeffs()[i];
        if (c.get_den() != 1 || !c.get_num().fits_slong_p() || std::abs(c.get_num().get_si()) > (1L << 30))
          return false;
        iv[i] = c.get_num().get_si();
      }
      out[a].push_back(std::move(iv));
    }
  }
  return true;
}

struct IntAccumulator {
  std::uint32_t e;
  std::size_t phi;
  std::vector<__int128> acc;
  const std::vector<std::vector<long long>>& table;

  IntAccumulator(std::uint32_t e_, std::size_t phi_)
      : e(e_), phi(phi_), acc(2 * phi_), table(integer_power_table(e_)) {}
  void clear() { std::fill(acc.begin(), acc.end(), 0); }
  void add_product(const IntVal& x, const IntVal& y, long long scale) {
    for (std::size_t i = 0; i < phi; ++i) {
      if (x[i] == 0) continue;
      const __int128 xi = static_cast<__int128>(x[i]) * scale;
      for (std::size_t j = 0; j < phi; ++j) acc[i + j] += xi * y[j];
    }
  }
  // True when the accumulated polynomial reduces to the integer `expect`.
  bool equals(__int128 expect) const {
    std::vector<__int128> red(phi, 0);
    for (std::size_t t = 0; t < acc.size(); ++t) {
      if (acc[t] == 0) continue;
      if (t < phi) {
        red[t] += acc[t];
      } else {
        const auto& row = table[t % e];
        for (std::size_t i = 0; i < phi; ++i) red[i] += acc[t] * row[i];
      }
    }
    if (red[0] != expect) return false;
    for (std::size_t i = 1; i < phi; ++i)
      if (red[i] != 0) return false;
    return true;
  }
};

OrthogonalityReport exact_orthogonality(const ClassInfo& info, const std::vector<Character>& chars) {
  OrthogonalityReport rep{true, true};
  const std::size_t n = chars.size(), r = info.count();
  const Cyclotomic order(mpq_class(mpz_class(static_cast<unsigned long>(info.group_order))));
  for (std::size_t a = 0; a < n && rep.rows; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Cyclotomic s;
      for (std::size_t k = 0; k < r; ++k)
        s += chars[a].values[k] * chars[b].values[k].conj() *
             mpq_class(mpz_class(static_cast<unsigned long>(info.sizes[k])));
      if (s != (a == b ? order : Cyclotomic(0))) {
        rep.rows = false;
        break;
      }
    }
  for (std::size_t k = 0; k < r && rep.columns; ++k)
    for (std::size_t l = k; l < r; ++l) {
      Cyclotomic s;
      for (std::size_t a = 0; a < n; ++a) s += chars[a].values[k] * chars[a].values[l].conj();
      const Cyclotomic want = k == l ? Cyclotomic(mpq_class(mpz_class(static_cast<unsigned long>(info.centralizer_order(k)))))
                                     : Cyclotomic(0);
      if (s != want) {
        rep.columns = false;
        break;
      }
    }
  return rep;
}

}  // namespace

OrthogonalityReport check_orthogonality(const ClassInfo& info, const std::vector<Character>& chars) {
  const std::size_t n = chars.size(), r = info.count();
  for (const auto& c : chars)
    if (c.values.size() != r) throw Error(ErrorCode::GroupMismatch, "character length differs from class count");
  std::uint32_t e = 1;
  for (const auto& c : chars)
    for (const auto& v : c.values) e = static_cast<std::uint32_t>(lcm_u64(e, v.conductor()));
  std::vector<std::vector<IntVal>> X, Xc;
  if (!to_int_values(chars, e, false, X) || !to_int_values(chars, e, true, Xc)) return exact_orthogonality(info, chars);

  const std::size_t phi = euler_phi(e);
  IntAccumulator acc(e, phi);
  OrthogonalityReport rep{true, true};
  for (std::size_t a = 0; a < n && rep.rows; ++a)
    for (std::size_t b = a; b < n; ++b) {
      acc.clear();
      for (std::size_t k = 0; k < r; ++k) acc.add_product(X[a][k], Xc[b][k], static_cast<long long>(info.sizes[k]));
      if (!acc.equals(a == b ? static_cast<__int128>(info.group_order) : 0)) {
        rep.rows = false;
        break;
      }
    }
  for (std::size_t k = 0; k < r && rep.columns; ++k)
    for (std::size_t l = k; l < r; ++l) {
      acc.clear();
      for (std::size_t a = 0; a < n; ++a) acc.add_product(X[a][k], Xc[a][l], 1);
      if (!acc.equals(k == l ? static_cast<__int128>(info.centralizer_order(k)) : 0)) {
        rep.columns = false;
        break;
      }
    }
  return rep;
}

// ----------------------------------------------------------- CharacterTable

CharacterTable::CharacterTable(ClassInfoPtr classes, std::vector<Character> irreducibles, std::uint64_t dixon_prime)
    : classes_(std::move(classes)), irr_(std::move(irreducibles)), prime_(dixon_prime) {
  const std::size_t r = classes_->count();
  if (irr_.size() != r) throw Error(ErrorCode::InternalInconsistency, "row count differs from class count");
  u64 sq = 0;
  for (auto& c : irr_) {
    c.classes = classes_;
    const long long d = c.degree();
    if (d <= 0) throw Error(ErrorCode::InternalInconsistency, "non-positive degree");
    sq += static_cast<u64>(d * d);
  }
  if (sq != classes_->group_order) throw Error(ErrorCode::InternalInconsistency, "sum of squared degrees differs from |G|");
  std::stable_sort(irr_.begin(), irr_.end(),
                   [](const Character& a, const Character& b) { return compare_characters(a, b) < 0; });
  const auto rep = check_orthogonality(*classes_, irr_);
  if (!rep.rows || !rep.columns) throw Error(ErrorCode::InternalInconsistency, "orthogonality relations fail");
}

std::vector<long long> CharacterTable::degrees() const {
  std::vector<long long> d;
  for (const auto& c : irr_) d.push_back(c.degree());
  return d;
}

long CharacterTable::find(const Character& chi) const {
  for (std::size_t i = 0; i < irr_.size(); ++i)
    if (irr_[i].values == chi.values) return static_cast<long>(i);
  return -1;
}

std::vector<long long> CharacterTable::decompose(const Character& chi) const {
  std::vector<long long> m;
  m.reserve(irr_.size());
  for (const auto& c : irr_) {
    mpq_class v = inner_product(chi, c);
    if (v.get_den() != 1 || !v.get_num().fits_slong_p())
      throw Error(ErrorCode::NotIntegral, "class function is not a virtual character");
    m.push_back(v.get_num().get_si());
  }
  return m;
}

// -------------------------------------------------------------------- Dixon

namespace {

using ModMatrix = std::vector<std::vector<u64>>;

u64 mulm(u64 a, u64 b, u64 p) { return a * b % p; }
u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

// Row-reduce in place; returns pivot columns.
std::vector<std::size_t> rref_mod(ModMatrix& m, std::size_t ncols, u64 p) {
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const u64 inv = invmod(m[row][col], p);
    for (auto& x : m[row]) x = mulm(x, inv, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const u64 f = m[i][col];
      for (std::size_t j = 0; j < ncols; ++j) m[i][j] = subm(m[i][j], mulm(f, m[row][j], p), p);
    }
    piv.push_back(col);
    ++row;
  }
  m.resize(row);
  return piv;
}

ModMatrix kernel_mod(ModMatrix m, std::size_t ncols, u64 p) {
  auto piv = rref_mod(m, ncols, p);
  std::vector<bool> is_piv(ncols, false);
  for (auto c : piv) is_piv[c] = true;
  ModMatrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<u64> v(ncols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (p - m[i][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial via Hessenberg reduction; coefficients low degree first.
std::vector<u64> charpoly_mod(ModMatrix H, u64 p) {
  const std::size_t n = H.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && H[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(H[i], H[m]);
      for (std::size_t j = 0; j < n; ++j) std::swap(H[j][i], H[j][m]);
    }
    const u64 inv = invmod(H[m][m - 1], p);
    for (i = m + 1; i < n; ++i) {
      const u64 u = mulm(H[i][m - 1], inv, p);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) H[i][j] = subm(H[i][j], mulm(u, H[m][j], p), p);
      for (std::size_t j = 0; j < n; ++j) H[j][m] = (H[j][m] + mulm(u, H[j][i], p)) % p;
    }
  }
  std::vector<std::vector<u64>> P(n + 1);
  P[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> q(m + 1, 0);
    const auto& prev = P[m - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      q[i + 1] = (q[i + 1] + prev[i]) % p;
      q[i] = subm(q[i], mulm(H[m - 1][m - 1], prev[i], p), p);
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mulm(t, H[m - i][m - i - 1], p);
      const u64 f = mulm(t, H[m - i - 1][m - 1], p);
      if (f == 0) continue;
      const auto& low = P[m - i - 1];
      for (std::size_t j = 0; j < low.size(); ++j) q[j] = subm(q[j], mulm(f, low[j], p), p);
    }
    P[m] = std::move(q);
  }
  return P[n];
}

std::vector<u64> roots_mod(const std::vector<u64>& poly, u64 p) {
  std::vector<u64> roots;
  for (u64 x = 0; x < p; ++x) {
    u64 v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = (mulm(v, x, p) + poly[i]) % p;
    if (v == 0) roots.push_back(x);
  }
  return roots;
}

// A subspace of F_p^r kept in reduced row echelon form.
struct Space {
  ModMatrix basis;
  std::vector<std::size_t> pivots;
};

Space make_space(ModMatrix rows, std::size_t r, u64 p) {
  Space s;
  s.pivots = rref_mod(rows, r, p);
  s.basis = std::move(rows);
  return s;
}

// Splits s into common eigenspaces of M; returns false when M acts as a scalar.
bool split_space(const Space& s, const ModMatrix& M, u64 p, std::vector<Space>& out) {
  const std::size_t d = s.basis.size(), r = M.size();
  ModMatrix A(d, std::vector<u64>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<u64> y(r, 0);
    for (std::size_t k = 0; k < r; ++k) {
      u64 acc = 0;
      for (std::size_t l = 0; l < r; ++l)
        if (M[k][l] && s.basis[i][l]) acc = (acc + mulm(M[k][l], s.basis[i][l], p)) % p;
      y[k] = acc;
    }
    for (std::size_t t = 0; t < d; ++t) A[t][i] = y[s.pivots[t]];
  }
  bool scalar = true;
  for (std::size_t i = 0; i < d && scalar; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if ((i == j && A[i][j] != A[0][0]) || (i != j && A[i][j] != 0)) {
        scalar = false;
        break;
      }
  if (scalar) return false;
  const auto roots = roots_mod(charpoly_mod(A, p), p);
  std::size_t total = 0;
  for (u64 lambda : roots) {
    ModMatrix B = A;
    for (std::size_t i = 0; i < d; ++i) B[i][i] = subm(B[i][i], lambda, p);
    const ModMatrix ker = kernel_mod(B, d, p);
    total += ker.size();
    ModMatrix rows;
    for (const auto& u : ker) {
      std::vector<u64> v(r, 0);
      for (std::size_t t = 0; t < d; ++t)
        if (u[t])
          for (std::size_t l = 0; l < r; ++l) v[l] = (v[l] + mulm(u[t], s.basis[t][l], p)) % p;
      rows.push_back(std::move(v));
    }
    out.push_back(make_space(std::move(rows), r, p));
  }
  if (total != d) throw Error(ErrorCode::InternalInconsistency, "class matrix does not split over the Dixon prime");
  return true;
}

}  // namespace

std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent, std::uint64_t bound) {
  for (u64 l = exponent + 1;; l += exponent) {
    if (l > bound) throw Error(ErrorCode::NoSuitablePrime, "no prime = 1 mod " + std::to_string(exponent) + " below bound");
    if (l * l > 4 * order && is_prime(l)) return l;
  }
}

CharacterTable character_table(const FiniteGroup& G, const DixonOptions& opts) {
  const auto& cc = G.classes();
  const std::size_t r = cc.count();
  const u64 order = G.order(), e = G.exponent();
  const u64 p = dixon_prime(order, e, opts.prime_bound);
  auto info = ClassInfo::of(G);

  // (M_j)[k][l] = #{x in K_j : x^-1 z_l in K_k}
  std::vector<ModMatrix> M(r, ModMatrix(r, std::vector<u64>(r, 0)));
  for (std::size_t l = 0; l < r; ++l) {
    const Elem z = cc.reps[l];
    for (std::size_t j = 0; j < r; ++j)
      for (Elem x : cc.members[j]) ++M[j][G.class_of(G.mul(G.inv(x), z))][l];
  }
  for (auto& m : M)
    for (auto& row : m)
      for (auto& v : row) v %= p;

  ModMatrix id(r, std::vector<u64>(r, 0));
  for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
  std::vector<Space> spaces{make_space(std::move(id), r, p)};
  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() == 1; })) break;
    std::vector<Space> next;
    for (auto& s : spaces) {
      if (s.basis.size() == 1 || !split_space(s, M[j], p, next)) next.push_back(std::move(s));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw Error(ErrorCode::InternalInconsistency, "class matrices fail to separate characters");

  const u64 z = powmod(primitive_root(p), (p - 1) / e, p);
  const auto& ptable = integer_power_table(static_cast<std::uint32_t>(e));
  const std::size_t phi = euler_phi(e);
  std::vector<Character> irr;
  for (const auto& s : spaces) {
    std::vector<u64> w = s.basis[0];
    const u64 w0inv = invmod(w[0], p);
    for (auto& x : w) x = mulm(x, w0inv, p);
    u64 sum = 0;
    for (std::size_t l = 0; l < r; ++l)
      sum = (sum + mulm(mulm(w[l], w[cc.inverse[l]], p), invmod(cc.sizes[l] % p, p), p)) % p;
    const u64 target = mulm(order % p, invmod(sum, p), p);
    u64 d = 0;
    for (u64 t = 1; t * t <= order; ++t)
      if (order % t == 0 && t * t % p == target) {
        d = t;
        break;
      }
    if (d == 0) throw Error(ErrorCode::InternalInconsistency, "no degree matches the central character");
    std::vector<u64> chi(r);
    for (std::size_t l = 0; l < r; ++l) chi[l] = mulm(mulm(d, w[l], p), invmod(cc.sizes[l] % p, p), p);

    Character c{info, {}};
    c.values.reserve(r);
    for (std::size_t l = 0; l < r; ++l) {
      const u64 o = cc.orders[l], step = e / o;
      const u64 oinv = invmod(o % p, p);
      std::vector<long long> coeffs(phi, 0);
      for (u64 sidx = 0; sidx < o; ++sidx) {
        // multiplicity of zeta_o^s as an eigenvalue
        const u64 base = powmod(z, (p - 1 - (step * sidx) % (p - 1)) % (p - 1), p);
        u64 acc = 0, zk = 1;
        for (u64 k = 0; k < o; ++k) {
          acc = (acc + mulm(chi[cc.power_map[l][k]], zk, p)) % p;
          zk = mulm(zk, base, p);
        }
        const u64 m = mulm(acc, oinv, p);
        if (m > d) throw Error(ErrorCode::InternalInconsistency, "eigenvalue multiplicity exceeds degree");
        if (m == 0) continue;
        const auto& row = ptable[step * sidx % e];
        for (std::size_t i = 0; i < phi; ++i) coeffs[i] += static_cast<long long>(m) * row[i];
      }
      std::vector<mpq_class> q(phi);
      for (std::size_t i = 0; i < phi; ++i) q[i] = static_cast<long>(coeffs[i]);
      c.values.push_back(Cyclotomic::from_coeffs(static_cast<std::uint32_t>(e), std::move(q)));
    }
    irr.push_back(std::move(c));
  }
  return CharacterTable(info, std::move(irr), p);
}

CharacterTable product_table(const FiniteGroup& P, const FiniteGroup& A, const CharacterTable& TA,
                             const FiniteGroup& B, const CharacterTable& TB) {
  if (P.degree() != A.degree() + B.degree() || P.order() != A.order() * B.order())
    throw Error(ErrorCode::GroupMismatch, "group is not the direct product of the factors");
  auto info = ClassInfo::of(P);
  const std::size_t r = P.nclasses(), da = A.degree();
  std::vector<std::uint32_t> ca(r), cb(r);
  std::vector<Point> pa(da), pb(B.degree());
  for (std::size_t k = 0; k < r; ++k) {
    const auto im = P.images(P.classes().reps[k]);
    for (std::size_t i = 0; i < da; ++i) pa[i] = im[i];
    for (std::size_t i = 0; i < pb.size(); ++i) pb[i] = static_cast<Point>(im[da + i] - da);
    const auto ea = A.find(pa), eb = B.find(pb);
    if (!ea || !eb) throw Error(ErrorCode::GroupMismatch, "class representative does not split over the factors");
    ca[k] = A.class_of(*ea);
    cb[k] = B.class_of(*eb);
  }
  std::vector<Character> irr;
  irr.reserve(TA.size() * TB.size());
  for (const auto& x : TA.irreducibles())
    for (const auto& y : TB.irreducibles()) {
      Character c{info, {}};
      c.values.reserve(r);
      for (std::size_t k = 0; k < r; ++k) c.values.push_back(x.values[ca[k]] * y.values[cb[k]]);
      irr.push_back(std::move(c));
    }
  return CharacterTable(info, std::move(irr));
}

std::string table_tsv(const ClassInfo& info, const std::vector<Character>& chars, const std::vector<std::string>& labels) {
  std::ostringstream os;
  const std::size_t r = info.count();
  os << "class";
  for (std::size_t k = 0; k < r; ++k) os << '\t' << k + 1;
  os << "\tapprox\norder";
  for (std::size_t k = 0; k < r; ++k) os << '\t' << info.orders[k];
  os << "\t\nsize";
  for (std::size_t k = 0; k < r; ++k) os << '\t' << info.sizes[k];
  os << "\t\n";
  char buf[64];
  for (std::size_t i = 0; i < chars.size(); ++i) {
    os << (i < labels.size() ? labels[i] : "X" + std::to_string(i + 1));
    std::string approx;
    for (std::size_t k = 0; k < r; ++k) {
      const auto& v = chars[i].values[k];
      os << '\t' << v.to_string();
      const auto c = v.to_complex();
      if (std::abs(c.imag()) < 1e-9)
        std::snprintf(buf, sizeof buf, "%.4f", c.real() + 0.0);
      else
        std::snprintf(buf, sizeof buf, "%.4f%+.4fi", c.real() + 0.0, c.imag());
      if (k) approx += ',';
      approx += buf;
    }
    os << '\t' << approx << '\n';
  }
  return os.str();
}

}  // namespace indrep
