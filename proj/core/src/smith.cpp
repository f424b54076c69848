#include "indrep/smith.hpp"

#include <algorithm>

#include "indrep/error.hpp"
#include "indrep/linalg.hpp"
#include "indrep/number_theory.hpp"

namespace indrep {

namespace {

void check_size(const GroupAnalysis& A, const VirtualModule& V) {
  if (V.mult.size() != A.real().size()) throw Error(ErrorCode::GroupMismatch, "module belongs to another group");
}

std::string class_name(const GroupAnalysis& A, std::uint32_t c) {
  return "#" + std::to_string(c + 1) + "(order " + std::to_string(A.lattice().classes[c].order) + ")";
}

}  // namespace

long long fixed_dim(const GroupAnalysis& A, const VirtualModule& V, std::uint32_t lattice_class) {
  check_size(A, V);
  const auto& T = A.fixed_dim_table();
  long long d = 0;
  for (std::size_t i = 0; i < V.mult.size(); ++i) d += V.mult[i] * T[i].at(lattice_class);
  return d;
}

long long fixed_dim(const GroupAnalysis& A, const VirtualModule& V, const ElementSet& K) {
  check_size(A, V);
  const auto d = A.irreducible_fixed_dims(K);
  long long s = 0;
  for (std::size_t i = 0; i < V.mult.size(); ++i) s += V.mult[i] * d[i];
  return s;
}

std::vector<std::vector<long long>> fixed_dim_table(const GroupAnalysis& A, const std::vector<VirtualModule>& modules) {
  std::vector<std::vector<long long>> out;
  const std::size_t n = A.lattice().size();
  for (const auto& m : modules) {
    std::vector<long long> row;
    for (std::uint32_t c = 0; c < n; ++c) row.push_back(fixed_dim(A, m, c));
    out.push_back(std::move(row));
  }
  return out;
}

PoResult po_member(const GroupAnalysis& A, const VirtualModule& U, const VirtualModule& V) {
  check_size(A, U);
  check_size(A, V);
  const VirtualModule x = U - V;
  PoResult r;
  const auto& pp = A.prime_power_classes();
  for (std::uint32_t c = 0; c < pp.size(); ++c) {
    if (!pp[c]) continue;
    Cyclotomic s;
    for (std::size_t i = 0; i < x.mult.size(); ++i)
      if (x.mult[i]) s += A.real()[i].chi.values[c] * mpq_class(static_cast<long>(x.mult[i]));
    if (!s.is_zero()) {
      r.member = false;
      r.witness_class = c;
      return r;
    }
  }
  return r;
}

bool reduced_po_member(const GroupAnalysis& A, const VirtualModule& U, const VirtualModule& V) {
  if (!po_member(A, U, V).member) return false;
  const ElementSet whole = whole_group(A.group()).set;
  return fixed_dim(A, U, whole) == 0 && fixed_dim(A, V, whole) == 0;
}

PairCheck gap_check(const GroupAnalysis& A, const VirtualModule& V, GapMode mode) {
  const auto& L = A.lattice();
  PairCheck r;
  for (std::uint32_t P : L.family_P()) {
    const long long dP = fixed_dim(A, V, P);
    for (std::uint32_t H : L.extensions[P]) {
      const long long dH = fixed_dim(A, V, H);
      const bool ok = mode == GapMode::Weak ? dP >= 2 * dH : dP > 2 * dH;
      if (!ok) {
        r.pass = false;
        r.witness = std::make_pair(P, H);
        return r;
      }
    }
  }
  return r;
}

ClassCheck dims_check(const GroupAnalysis& A, const VirtualModule& V) {
  const auto& L = A.lattice();
  ClassCheck r;
  for (std::uint32_t P : L.family_P())
    if (fixed_dim(A, V, P) < 5) {
      r.pass = false;
      r.witness = P;
      return r;
    }
  for (std::uint32_t H : L.family_PC())
    if (fixed_dim(A, V, H) < 2) {
      r.pass = false;
      r.witness = H;
      return r;
    }
  return r;
}

PairCheck isotropy_check(const GroupAnalysis& A, const VirtualModule& V) {
  const auto& L = A.lattice();
  PairCheck r;
  for (std::uint32_t H : L.family_PC()) {
    const long long dH = fixed_dim(A, V, H);
    for (std::uint32_t K : L.extensions[H])
      if (fixed_dim(A, V, K) >= dH) {
        r.pass = false;
        r.witness = std::make_pair(H, K);
        return r;
      }
  }
  return r;
}

ClassCheck large_vanishing(const GroupAnalysis& A, const VirtualModule& V) {
  check_size(A, V);
  ClassCheck r;
  const auto& D = A.residual_fixed_dims();
  for (std::uint32_t k = 0; k < A.residuals().size(); ++k) {
    long long d = 0;
    for (std::size_t i = 0; i < V.mult.size(); ++i) d += V.mult[i] * D[i][k];
    if (d != 0) {
      r.pass = false;
      r.witness = k;
      return r;
    }
  }
  return r;
}

OrientationResult p_oriented(const GroupAnalysis& A, const VirtualModule& V) {
  check_size(A, V);
  OrientationResult r;
  for (const auto& oc : A.orientation_checks()) {
    long long s = 0;
    for (std::size_t i = 0; i < V.mult.size(); ++i) s += V.mult[i] * oc.exponent[i];
    if (((s % oc.order) + oc.order) % oc.order != 0) {
      r.oriented = false;
      r.witness = std::make_pair(oc.subgroup_class, oc.g);
      return r;
    }
  }
  return r;
}

bool SmithReport::matched() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const ConditionResult& c) { return c.pass; });
}

bool SmithReport::overall(bool waive_orientability) const {
  return matched() && (waive_orientability || (oriented_U.oriented && oriented_V.oriented));
}

SmithReport smith_matched(const GroupAnalysis& A, const VirtualModule& U, const VirtualModule& V) {
  check_size(A, U);
  check_size(A, V);
  SmithReport rep;
  const auto& R = A.real();
  rep.dim_U = dimension(R, U);
  rep.dim_V = dimension(R, V);
  rep.isomorphic = U == V;

  ConditionResult c1{1, "U-V in reduced PO", true, ""};
  const PoResult po = po_member(A, U, V);
  const ElementSet whole = whole_group(A.group()).set;
  if (!po.member) {
    c1.pass = false;
    c1.witness = "characters differ on G-class " + std::to_string(*po.witness_class + 1) + " (element order " +
                 std::to_string(A.group().classes().orders[*po.witness_class]) + ")";
  } else if (fixed_dim(A, U, whole) != 0 || fixed_dim(A, V, whole) != 0) {
    c1.pass = false;
    c1.witness = "nonzero G-fixed points";
  }
  rep.conditions.push_back(c1);

  auto pair_text = [&](const char* which, const std::pair<std::uint32_t, std::uint32_t>& w) {
    return std::string(which) + ": " + class_name(A, w.first) + " < " + class_name(A, w.second);
  };
  auto class_text = [&](const char* which, std::uint32_t c) { return std::string(which) + ": " + class_name(A, c); };

  ConditionResult c2{2, "weak gap condition", true, ""};
  for (const auto& [m, name] : {std::pair{&U, "U"}, std::pair{&V, "V"}}) {
    const PairCheck g = gap_check(A, *m, GapMode::Weak);
    if (!g.pass && c2.pass) {
      c2.pass = false;
      c2.witness = pair_text(name, *g.witness);
    }
  }
  rep.conditions.push_back(c2);

  ConditionResult c3{3, "dim W^P >= 5 on P(G), dim W^H >= 2 on PC(G)", true, ""};
  for (const auto& [m, name] : {std::pair{&U, "U"}, std::pair{&V, "V"}}) {
    const ClassCheck d = dims_check(A, *m);
    if (!d.pass && c3.pass) {
      c3.pass = false;
      c3.witness = class_text(name, *d.witness);
    }
  }
  rep.conditions.push_back(c3);

  ConditionResult c4{4, "pseudocyclic subgroups are isotropy subgroups", true, ""};
  for (const auto& [m, name] : {std::pair{&U, "U"}, std::pair{&V, "V"}}) {
    const PairCheck d = isotropy_check(A, *m);
    if (!d.pass && c4.pass) {
      c4.pass = false;
      c4.witness = pair_text(name, *d.witness);
    }
  }
  rep.conditions.push_back(c4);

  ConditionResult c5{5, "U^L = V^L = 0 for large L", true, ""};
  for (const auto& [m, name] : {std::pair{&U, "U"}, std::pair{&V, "V"}}) {
    const ClassCheck d = large_vanishing(A, *m);
    if (!d.pass && c5.pass) {
      c5.pass = false;
      c5.witness = std::string(name) + ": O^" + std::to_string(A.residuals()[*d.witness].first) + "(G)";
    }
  }
  rep.conditions.push_back(c5);

  ConditionResult c6{6, "dim U = dim V >= 6", rep.dim_U == rep.dim_V && rep.dim_U >= 6, ""};
  if (!c6.pass) c6.witness = "dim U = " + std::to_string(rep.dim_U) + ", dim V = " + std::to_string(rep.dim_V);
  rep.conditions.push_back(c6);

  rep.oriented_U = p_oriented(A, U);
  rep.oriented_V = p_oriented(A, V);
  return rep;
}

VirtualModule induce_module(const GroupAnalysis& G, const GroupAnalysis& N, const Embedded& emb, const Fusion& f,
                            const VirtualModule& V) {
  check_size(N, V);
  if (emb.into.size() != N.group().order()) throw Error(ErrorCode::NotSubgroup, "embedding does not match the subgroup");
  std::uint64_t covered = 0;
  std::vector<bool> hit(G.group().nclasses(), false);
  for (auto c : f.classes) hit[c] = true;
  for (std::size_t c = 0; c < hit.size(); ++c)
    if (hit[c]) covered += G.group().classes().sizes[c];
  if (covered != N.group().order()) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  const Character ind = induce_character(G.table().class_info(), f, module_character(N.real(), V));
  return VirtualModule{G.real().decompose(ind)};
}

std::size_t prim(const FiniteGroup& G) {
  std::size_t n = 0;
  const auto& rc = G.real_classes();
  for (std::size_t i = 0; i < rc.count(); ++i)
    if (prime_divisors(G.elem_order(rc.reps[i])).size() >= 2) ++n;
  return n;
}

std::size_t prim_bar(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw Error(ErrorCode::NotNormal, "prim_bar needs a normal subgroup");
  const Quotient Q = quotient_group(G, N);
  std::vector<bool> mark(Q.group.nrealclasses(), false);
  const auto& cc = G.classes();
  for (std::size_t c = 0; c < cc.count(); ++c) {
    if (is_prime_power_or_one(cc.orders[c])) continue;
    const Elem q = Q.projection[cc.reps[c]];
    mark[Q.group.real_classes().real_of_class[Q.group.class_of(q)]] = true;
  }
  return static_cast<std::size_t>(std::count(mark.begin(), mark.end(), true));
}

std::vector<std::size_t> large_vanishing_support(const GroupAnalysis& A) {
  std::vector<std::size_t> out;
  const auto& D = A.residual_fixed_dims();
  for (std::size_t i = 0; i < D.size(); ++i)
    if (std::all_of(D[i].begin(), D[i].end(), [](long long d) { return d == 0; })) out.push_back(i);
  return out;
}

QMatrix po_constraint_matrix(const GroupAnalysis& A, const std::vector<std::size_t>& support) {
  const FiniteGroup& G = A.group();
  const auto& rc = G.real_classes();
  const auto e = static_cast<std::uint32_t>(G.exponent());
  const std::size_t phi = euler_phi(e);
  QMatrix M;
  for (std::size_t r = 0; r < rc.count(); ++r) {
    const std::uint32_t c = G.class_of(rc.reps[r]);
    if (!A.prime_power_classes()[c]) continue;
    std::vector<std::vector<mpq_class>> rows(phi, std::vector<mpq_class>(support.size()));
    for (std::size_t j = 0; j < support.size(); ++j) {
      const Cyclotomic v = A.real()[support[j]].chi.values[c].lifted(e);
      for (std::size_t t = 0; t < phi; ++t) rows[t][j] = v.coeffs()[t];
    }
    for (auto& row : rows)
      if (std::any_of(row.begin(), row.end(), [](const mpq_class& q) { return q != 0; })) M.push_back(std::move(row));
  }
  return M;
}

PoRanks po_lattice_ranks(const GroupAnalysis& A) {
  const FiniteGroup& G = A.group();
  PoRanks r;
  r.prim = prim(G);
  auto nullity = [&](const std::vector<std::size_t>& support) {
    if (support.empty()) return std::size_t{0};
    return support.size() - rank_rational(po_constraint_matrix(A, support), support.size());
  };
  std::vector<std::size_t> all(A.real().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  r.rank_po = nullity(all);
  std::vector<std::size_t> nontrivial(all.begin() + 1, all.end());
  r.rank_reduced = nullity(nontrivial);
  if (r.rank_po != r.prim || r.rank_reduced != (r.prim > 0 ? r.prim - 1 : 0))
    throw Error(ErrorCode::InternalInconsistency, "PO lattice ranks disagree with prim(G)");
  r.rank_reduced_L = nullity(large_vanishing_support(A));
  const Subgroup nil = nilpotent_residual(G);
  const Quotient Q = quotient_group(G, nil);
  r.beta_nil = Q.group.nrealclasses();
  r.bound = static_cast<long long>(r.prim) - static_cast<long long>(r.beta_nil);
  r.prim_bar_nil = prim_bar(G, nil);
  return r;
}

}  // namespace indrep
