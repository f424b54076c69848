#include "indrep/linalg.hpp"

#include "indrep/number_theory.hpp"

namespace indrep {

std::vector<std::size_t> rref(QMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    mpq_class inv = 1 / m[row][col];
    for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      mpq_class f = m[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        if (m[row][j] != 0) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

QMatrix nullspace(QMatrix m, std::size_t ncols) {
  auto piv = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : piv) is_pivot[c] = true;
  QMatrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(ncols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank_rational(QMatrix m, std::size_t ncols) { return rref(m, ncols).size(); }

std::size_t rank_bareiss(ZMatrix m) {
  const std::size_t rows = m.size();
  if (!rows) return 0;
  const std::size_t cols = m[0].size();
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t p = rank;
    while (p < rows && m[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        m[i][j] = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const ZMatrix& src, std::uint64_t p) {
  const std::size_t rows = src.size();
  if (!rows) return 0;
  const std::size_t cols = src[0].size();
  std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(cols));
  mpz_class r;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_fdiv_r_ui(r.get_mpz_t(), src[i][j].get_mpz_t(), p);
      m[i][j] = r.get_ui();
    }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    std::uint64_t inv = invmod(m[rank][col], p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (!m[i][col]) continue;
      std::uint64_t f = static_cast<std::uint64_t>((unsigned __int128)m[i][col] * inv % p);
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] = (m[i][j] + p - static_cast<std::uint64_t>((unsigned __int128)f * m[rank][j] % p)) % p;
    }
    ++rank;
  }
  return rank;
}

std::vector<mpz_class> primitive_integer_vector(const std::vector<mpq_class>& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class y = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
    out.push_back(y);
  }
  if (g > 1)
    for (auto& y : out) y /= g;
  return out;
}

}  // namespace indrep
