#include "indrep/search.hpp"

#include <algorithm>
#include <map>

#include "indrep/error.hpp"
#include "indrep/linalg.hpp"

namespace indrep {

namespace {

// Nonzero integer vectors x on the support with C x = 0 and |x_i| deg_i <= max_dim,
// with the first nonzero coordinate positive.
std::vector<std::vector<long long>> difference_vectors(const QMatrix& C, const std::vector<long long>& deg,
                                                       long long max_dim, std::size_t& rank, std::size_t node_cap,
                                                       std::size_t& nodes) {
  const std::size_t n = deg.size();
  QMatrix R = C;
  const auto piv = rref(R, n);
  std::vector<bool> is_piv(n, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_piv[j]) free.push_back(j);
  rank = free.size();
  std::vector<std::vector<long long>> out;
  if (free.empty()) return out;
  std::vector<long long> bound(n);
  for (std::size_t j = 0; j < n; ++j) bound[j] = max_dim / deg[j];
  std::vector<long long> x(n, 0);
  std::vector<long long> val(free.size());
  for (std::size_t k = 0; k < free.size(); ++k) val[k] = -bound[free[k]];
  while (true) {
    if (++nodes > node_cap) throw Error(ErrorCode::SearchBudgetExceeded, "difference enumeration exceeds the node cap");
    std::fill(x.begin(), x.end(), 0);
    for (std::size_t k = 0; k < free.size(); ++k) x[free[k]] = val[k];
    bool ok = true;
    for (std::size_t r = 0; r < piv.size() && ok; ++r) {
      mpq_class s = 0;
      for (std::size_t k = 0; k < free.size(); ++k)
        if (val[k] != 0 && R[r][free[k]] != 0) s -= R[r][free[k]] * static_cast<long>(val[k]);
      if (s.get_den() != 1 || abs(s) > static_cast<long>(bound[piv[r]])) {
        ok = false;
        break;
      }
      x[piv[r]] = s.get_num().get_si();
    }
    if (ok) {
      auto first = std::find_if(x.begin(), x.end(), [](long long v) { return v != 0; });
      if (first != x.end() && *first > 0) {
        long long dpos = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (x[j] > 0) dpos += x[j] * deg[j];
        if (dpos <= max_dim) out.push_back(x);
      }
    }
    std::size_t k = 0;
    while (k < free.size() && val[k] == bound[free[k]]) {
      val[k] = -bound[free[k]];
      ++k;
    }
    if (k == free.size()) break;
    ++val[k];
  }
  return out;
}

struct Tables {
  std::vector<std::uint32_t> P, PC;
  const std::vector<std::vector<std::uint32_t>>* ext = nullptr;
  std::size_t nclasses = 0;
};

bool gap_ok(const Tables& T, const std::vector<long long>& fd, bool strong) {
  for (auto P : T.P)
    for (auto H : (*T.ext)[P]) {
      if (strong ? !(fd[P] > 2 * fd[H]) : !(fd[P] >= 2 * fd[H])) return false;
    }
  return true;
}

bool smith_ok(const Tables& T, const std::vector<long long>& fd) {
  for (auto P : T.P)
    if (fd[P] < 5) return false;
  for (auto H : T.PC)
    if (fd[H] < 2) return false;
  if (!gap_ok(T, fd, false)) return false;
  for (auto H : T.PC)
    for (auto K : (*T.ext)[H])
      if (fd[K] >= fd[H]) return false;
  return true;
}

}  // namespace

SearchResult smith_search(const GroupAnalysis& A, const SearchOptions& opts) {
  SearchResult res;
  const auto& L = A.lattice();
  const auto& R = A.real();
  const auto support = large_vanishing_support(A);
  const std::size_t n = support.size();
  if (n == 0) return res;
  std::vector<long long> deg(n);
  for (std::size_t j = 0; j < n; ++j) deg[j] = R[support[j]].degree();
  const QMatrix C = po_constraint_matrix(A, support);
  const auto diffs = difference_vectors(C, deg, opts.max_dim, res.lattice_rank, opts.node_cap, res.nodes);
  res.differences = diffs.size();
  if (diffs.empty()) return res;

  Tables T;
  T.P = L.family_P();
  T.PC = L.family_PC();
  T.ext = &L.extensions;
  T.nclasses = L.size();
  const auto& F = A.fixed_dim_table();
  const auto& orient = opts.waive_orientability ? std::vector<OrientationCheck>{} : A.orientation_checks();

  auto fixed_of = [&](const std::vector<long long>& m) {
    std::vector<long long> fd(T.nclasses, 0);
    for (std::size_t j = 0; j < n; ++j)
      if (m[j])
        for (std::size_t c = 0; c < T.nclasses; ++c) fd[c] += m[j] * F[support[j]][c];
    return fd;
  };
  auto oriented = [&](const std::vector<long long>& m) {
    for (const auto& oc : orient) {
      long long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += m[j] * oc.exponent[support[j]];
      if (s % oc.order != 0) return false;
    }
    return true;
  };
  auto lift = [&](const std::vector<long long>& m) {
    VirtualModule v = zero_module(R);
    for (std::size_t j = 0; j < n; ++j) v.mult[support[j]] = m[j];
    return v;
  };

  struct Diff {
    std::vector<long long> pos, neg;
    std::vector<long long> fpos, fneg;
    long long dim = 0;
  };
  std::vector<Diff> D;
  for (const auto& x : diffs) {
    Diff d;
    d.pos.resize(n);
    d.neg.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      d.pos[j] = std::max(x[j], 0LL);
      d.neg[j] = std::max(-x[j], 0LL);
      d.dim += d.pos[j] * deg[j];
    }
    d.fpos = fixed_of(d.pos);
    d.fneg = fixed_of(d.neg);
    D.push_back(std::move(d));
  }

  std::vector<long long> w(n, 0), fw(T.nclasses, 0), fu(T.nclasses), fv(T.nclasses), mu(n), mv(n);
  for (long long total = 6; total <= opts.max_dim && res.pairs.empty(); ++total) {
    for (const auto& d : D) {
      if (d.dim > total) continue;
      // W ranges over non-negative combinations of dimension total - d.dim.
      auto rec = [&](auto&& self, std::size_t j, long long left) -> void {
        if (j == n) {
          if (left != 0) return;
          if (++res.nodes > opts.node_cap) throw Error(ErrorCode::SearchBudgetExceeded, "Smith search exceeds the node cap");
          for (std::size_t c = 0; c < T.nclasses; ++c) {
            fu[c] = d.fpos[c] + fw[c];
            fv[c] = d.fneg[c] + fw[c];
          }
          if (!smith_ok(T, fu) || !smith_ok(T, fv)) return;
          for (std::size_t i = 0; i < n; ++i) {
            mu[i] = d.pos[i] + w[i];
            mv[i] = d.neg[i] + w[i];
          }
          if (!oriented(mu) || !oriented(mv)) return;
          res.pairs.emplace_back(lift(mu), lift(mv));
          return;
        }
        const long long maxk = left / deg[j];
        for (long long k = 0; k <= maxk; ++k) {
          w[j] = k;
          if (k)
            for (std::size_t c = 0; c < T.nclasses; ++c) fw[c] += F[support[j]][c];
          self(self, j + 1, left - k * deg[j]);
        }
        if (maxk)
          for (std::size_t c = 0; c < T.nclasses; ++c) fw[c] -= maxk * F[support[j]][c];
        w[j] = 0;
      };
      rec(rec, 0, total - d.dim);
    }
    if (!res.pairs.empty()) res.min_dim = total;
  }
  std::sort(res.pairs.begin(), res.pairs.end());
  return res;
}

GapResult gap_group_check(const GroupAnalysis& A, long long dim_cap, std::size_t node_cap) {
  GapResult res;
  const auto& L = A.lattice();
  for (std::uint32_t c = 0; c < L.size(); ++c)
    if (L.classes[c].prime_power && L.classes[c].large) {
      res.p_and_large = c;
      res.reason = "a subgroup of prime power order is large";
      return res;
    }
  const auto support = large_vanishing_support(A);
  const auto& F = A.fixed_dim_table();
  // Irreducibles with equal fixed-dimension profiles are interchangeable here.
  std::map<std::vector<long long>, std::size_t> by_profile;
  for (auto i : support) {
    std::vector<long long> prof;
    for (std::size_t c = 0; c < L.size(); ++c) prof.push_back(F[i][c]);
    by_profile.emplace(std::move(prof), i);
  }
  std::vector<std::size_t> reps;
  for (const auto& [prof, i] : by_profile) reps.push_back(i);
  std::sort(reps.begin(), reps.end());
  const std::size_t n = reps.size();
  if (n == 0) {
    res.reason = "no irreducible vanishes on the large subgroups";
    return res;
  }
  Tables T;
  T.P = L.family_P();
  T.ext = &L.extensions;
  T.nclasses = L.size();
  std::vector<long long> deg(n), w(n, 0), fw(T.nclasses, 0);
  for (std::size_t j = 0; j < n; ++j) deg[j] = A.real()[reps[j]].degree();
  for (long long total = 1; total <= dim_cap && !res.gap; ++total) {
    auto rec = [&](auto&& self, std::size_t j, long long left) -> void {
      if (res.gap) return;
      if (j == n) {
        if (left != 0) return;
        if (++res.nodes > node_cap) throw Error(ErrorCode::SearchBudgetExceeded, "gap search exceeds the node cap");
        if (gap_ok(T, fw, true)) {
          VirtualModule v = zero_module(A.real());
          for (std::size_t i = 0; i < n; ++i) v.mult[reps[i]] = w[i];
          res.gap = true;
          res.witness = std::move(v);
        }
        return;
      }
      const long long maxk = left / deg[j];
      long long k = 0;
      for (; k <= maxk && !res.gap; ++k) {
        w[j] = k;
        if (k)
          for (std::size_t c = 0; c < T.nclasses; ++c) fw[c] += F[reps[j]][c];
        self(self, j + 1, left - k * deg[j]);
      }
      if (res.gap) return;
      if (maxk)
        for (std::size_t c = 0; c < T.nclasses; ++c) fw[c] -= maxk * F[reps[j]][c];
      w[j] = 0;
    };
    rec(rec, 0, total);
  }
  if (!res.gap) res.reason = "no strong gap module up to dimension " + std::to_string(dim_cap);
  return res;
}

}  // namespace indrep
