#include "indrep/subgroup.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "indrep/error.hpp"
#include "indrep/number_theory.hpp"

namespace indrep {

ElementSet ElementSet::from_elements(std::size_t universe, std::span<const Elem> elems) {
  ElementSet s(universe);
  for (Elem e : elems) s.insert(e);
  return s;
}

bool ElementSet::insert(Elem e) {
  auto& w = bits_[e >> 6];
  std::uint64_t m = std::uint64_t{1} << (e & 63);
  if (w & m) return false;
  w |= m;
  if (!elems_.empty() && elems_.back() > e) sorted_ = false;
  elems_.push_back(e);
  return true;
}

const std::vector<Elem>& ElementSet::elements() const {
  if (!sorted_) {
    std::sort(elems_.begin(), elems_.end());
    sorted_ = true;
  }
  return elems_;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet r(universe_);
  for (Elem e : elements())
    if (other.contains(e)) r.insert(e);
  return r;
}

std::size_t ElementSetHash::operator()(const ElementSet& s) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto w : s.bits()) h = (h ^ w) * 1099511628211ull;
  return h;
}

Subgroup trivial_subgroup(const FiniteGroup& G) {
  Subgroup H{ElementSet(G.order()), {}};
  H.set.insert(FiniteGroup::identity());
  return H;
}

Subgroup whole_group(const FiniteGroup& G) {
  Subgroup H{ElementSet(G.order()), G.generator_elems()};
  for (Elem e = 0; e < G.order(); ++e) H.set.insert(e);
  return H;
}

namespace {

void close_under(const FiniteGroup& G, Subgroup& H) {
  const auto& list0 = H.set.elements();
  std::vector<Elem> queue(list0.begin(), list0.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Elem s : H.gens) {
      Elem y = G.mul(queue[i], s);
      if (H.set.insert(y)) queue.push_back(y);
    }
}

}  // namespace

Subgroup generate(const FiniteGroup& G, std::span<const Elem> gens) {
  Subgroup H = trivial_subgroup(G);
  for (Elem g : gens)
    if (!H.set.contains(g)) {
      H.gens.push_back(g);
      close_under(G, H);
    }
  return H;
}

Subgroup extend(const FiniteGroup& G, const Subgroup& H, std::span<const Elem> extra) {
  Subgroup K = H;
  for (Elem g : extra)
    if (!K.set.contains(g)) {
      K.gens.push_back(g);
      close_under(G, K);
    }
  return K;
}

Subgroup join(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
  if (B.set.subset_of(A.set)) return A;
  if (A.set.subset_of(B.set)) return B;
  return extend(G, A, B.gens);
}

Subgroup intersection(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
  return subgroup_from_set(G, A.set.intersect(B.set));
}

std::vector<Elem> generating_set(const FiniteGroup& G, const ElementSet& set) {
  Subgroup cur = trivial_subgroup(G);
  // Prefer elements of large order so that generating sets stay short.
  std::vector<Elem> cand(set.elements().begin(), set.elements().end());
  std::stable_sort(cand.begin(), cand.end(), [&](Elem a, Elem b) { return G.elem_order(a) > G.elem_order(b); });
  for (Elem e : cand) {
    if (cur.order() == set.size()) break;
    if (!cur.set.contains(e)) {
      cur.gens.push_back(e);
      close_under(G, cur);
    }
  }
  return cur.gens;
}

Subgroup subgroup_from_set(const FiniteGroup& G, const ElementSet& set) {
  Subgroup H{set, generating_set(G, set)};
  Subgroup check = generate(G, H.gens);
  if (!(check.set == set)) throw Error(ErrorCode::NotSubgroup, "element set is not closed under products");
  return H;
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (Elem h : H.gens)
    for (std::size_t j = 0; j < G.generator_elems().size(); ++j)
      if (!H.set.contains(G.conj_by_generator(h, j))) return false;
  return true;
}

Subgroup normal_closure(const FiniteGroup& G, std::span<const Elem> seeds) {
  Subgroup N = generate(G, seeds);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < N.gens.size(); ++i)
      for (std::size_t j = 0; j < G.generator_elems().size(); ++j) {
        Elem c = G.conj_by_generator(N.gens[i], j);
        if (!N.set.contains(c)) {
          N.gens.push_back(c);
          close_under(G, N);
          changed = true;
        }
      }
  }
  return N;
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
  ElementSet s(G.order());
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem h : H.gens)
      if (!H.set.contains(G.conj(h, g))) {
        ok = false;
        break;
      }
    if (ok) s.insert(g);
  }
  return Subgroup{s, generating_set(G, s)};
}

ElementSet conjugate_set(const FiniteGroup& G, const ElementSet& S, Elem g) {
  ElementSet r(G.order());
  for (Elem x : S.elements()) r.insert(G.conj(x, g));
  return r;
}

Subgroup conjugate(const FiniteGroup& G, const Subgroup& H, Elem g) {
  Subgroup r{conjugate_set(G, H.set, g), {}};
  for (Elem h : H.gens) r.gens.push_back(G.conj(h, g));
  return r;
}

Subgroup commutator(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
  std::vector<Elem> seeds;
  for (Elem a : A.gens)
    for (Elem b : B.gens) {
      Elem c = G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
      if (c != FiniteGroup::identity()) seeds.push_back(c);
    }
  return normal_closure(G, seeds);
}

bool is_abelian(const FiniteGroup& G, const Subgroup& H) {
  for (Elem a : H.gens)
    for (Elem b : H.gens)
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

bool is_cyclic(const FiniteGroup& G, const Subgroup& H) {
  for (Elem e : H.elements())
    if (G.elem_order(e) == H.order()) return true;
  return false;
}

bool is_p_group(const Subgroup& H, std::uint64_t p) {
  std::uint64_t n = H.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G) {
  std::vector<Subgroup> closures;
  std::unordered_set<ElementSet, ElementSetHash> seen_closure;
  for (std::size_t i = 1; i < G.nclasses(); ++i) {
    Elem rep = G.classes().reps[i];
    Subgroup N = normal_closure(G, std::span<const Elem>(&rep, 1));
    if (seen_closure.insert(N.set).second) closures.push_back(std::move(N));
  }
  std::vector<Subgroup> all{trivial_subgroup(G)};
  std::unordered_set<ElementSet, ElementSetHash> seen{all.front().set};
  for (const auto& C : closures) {
    std::size_t n = all.size();
    for (std::size_t i = 0; i < n; ++i) {
      Subgroup J = join(G, all[i], C);
      if (seen.insert(J.set).second) all.push_back(std::move(J));
    }
  }
  std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return all;
}

Subgroup o_p_residual(const FiniteGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p));
  std::vector<Elem> seeds;
  for (std::size_t i = 1; i < G.nclasses(); ++i)
    if (G.classes().orders[i] % p != 0) seeds.push_back(G.classes().reps[i]);
  return normal_closure(G, seeds);
}

Subgroup nilpotent_residual(const FiniteGroup& G) {
  Subgroup gamma = whole_group(G);
  Subgroup all = gamma;
  for (;;) {
    Subgroup next = commutator(G, gamma, all);
    if (next.order() == gamma.order()) return gamma;
    gamma = std::move(next);
  }
}

bool is_nilpotent(const FiniteGroup& G) { return nilpotent_residual(G).order() == 1; }

Subgroup derived_subgroup(const FiniteGroup& G) {
  Subgroup all = whole_group(G);
  return commutator(G, all, all);
}

bool is_solvable(const FiniteGroup& G) {
  Subgroup cur = whole_group(G);
  while (cur.order() > 1) {
    Subgroup next = commutator(G, cur, cur);
    if (next.order() == cur.order()) return false;
    cur = std::move(next);
  }
  return true;
}

Quotient quotient_group(const FiniteGroup& G, const Subgroup& N, const GroupOptions& opts) {
  if (!is_normal(G, N)) throw Error(ErrorCode::NotNormal, "quotient by a subgroup that is not normal");
  constexpr std::uint32_t none = 0xFFFFFFFFu;
  std::vector<std::uint32_t> coset_of(G.order(), none);
  std::vector<Elem> coset_rep;
  for (Elem x = 0; x < G.order(); ++x) {
    if (coset_of[x] != none) continue;
    auto id = static_cast<std::uint32_t>(coset_rep.size());
    coset_rep.push_back(x);
    for (Elem n : N.elements()) coset_of[G.mul(n, x)] = id;
  }
  const std::size_t m = coset_rep.size();
  std::vector<Permutation> gens;
  for (Elem g : G.generator_elems()) {
    std::vector<Point> im(m);
    for (std::size_t c = 0; c < m; ++c) im[c] = static_cast<Point>(coset_of[G.mul(coset_rep[c], g)]);
    gens.emplace_back(std::move(im));
  }
  Quotient Q{FiniteGroup::build(m, gens, opts), {}};
  std::vector<Elem> qgen;
  for (const auto& p : gens) qgen.push_back(Q.group.index_of(p));
  Q.projection.resize(G.order());
  for (Elem e = 0; e < G.order(); ++e) {
    Elem r = FiniteGroup::identity();
    for (auto j : G.word(e)) r = Q.group.mul(r, qgen[j]);
    Q.projection[e] = r;
  }
  return Q;
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B, const GroupOptions& opts) {
  const std::size_t da = A.degree(), db = B.degree();
  std::vector<Permutation> gens;
  for (const auto& g : A.generators()) {
    std::vector<Point> im(da + db);
    std::iota(im.begin(), im.end(), Point{0});
    for (std::size_t i = 0; i < da; ++i) im[i] = g[i];
    gens.emplace_back(std::move(im));
  }
  for (const auto& g : B.generators()) {
    std::vector<Point> im(da + db);
    std::iota(im.begin(), im.end(), Point{0});
    for (std::size_t i = 0; i < db; ++i) im[da + i] = static_cast<Point>(da + g[i]);
    gens.emplace_back(std::move(im));
  }
  if (A.order() * B.order() > opts.max_order)
    throw Error(ErrorCode::OrderCapExceeded, "direct product order exceeds cap");
  return FiniteGroup::build(da + db, std::move(gens), opts);
}

Embedded as_group(const FiniteGroup& G, const Subgroup& H) {
  std::vector<Permutation> gens;
  for (Elem g : H.gens) gens.push_back(G.element(g));
  GroupOptions opts;
  opts.max_order = std::max<std::size_t>(G.order(), 1);
  Embedded E{FiniteGroup::build(G.degree(), std::move(gens), opts), {}};
  E.into.resize(E.group.order());
  for (Elem h = 0; h < E.group.order(); ++h) E.into[h] = *G.find(E.group.images(h));
  return E;
}

Fingerprint fingerprint(const FiniteGroup& G) {
  Fingerprint f;
  f.order = G.order();
  f.nclasses = G.nclasses();
  for (std::size_t i = 0; i < G.nclasses(); ++i) f.class_profile.emplace_back(G.classes().orders[i], G.classes().sizes[i]);
  std::sort(f.class_profile.begin(), f.class_profile.end());
  return f;
}

}  // namespace indrep
