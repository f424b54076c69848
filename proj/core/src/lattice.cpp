#include "indrep/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "indrep/error.hpp"
#include "indrep/number_theory.hpp"

namespace indrep {

std::uint32_t SubgroupLattice::class_of(const ElementSet& s) const {
  auto it = index.find(s);
  if (it == index.end()) throw Error(ErrorCode::NotSubgroup, "set is not a subgroup of the lattice group");
  return it->second;
}

std::vector<std::uint32_t> SubgroupLattice::family_P() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < classes.size(); ++i)
    if (classes[i].prime_power) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> SubgroupLattice::family_PC() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < classes.size(); ++i)
    if (classes[i].pseudocyclic) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> SubgroupLattice::family_L() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < classes.size(); ++i)
    if (classes[i].large) out.push_back(i);
  return out;
}

namespace {

std::vector<ElementSet> conjugacy_orbit(const FiniteGroup& G, const ElementSet& s) {
  std::vector<ElementSet> orbit{s};
  std::set<ElementSet> seen{s};
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (Elem g : G.generator_elems()) {
      ElementSet t = conjugate_set(G, orbit[i], g);
      if (seen.insert(t).second) orbit.push_back(std::move(t));
    }
  return orbit;
}

bool is_minimal_over(const FiniteGroup& G, const Subgroup& R, const Subgroup& K) {
  std::vector<bool> seen(G.order(), false);
  for (Elem r : R.elements()) seen[r] = true;
  for (Elem x : K.elements()) {
    if (seen[x]) continue;
    const Elem one[] = {x};
    const Subgroup M = extend(G, R, one);
    if (M.order() != K.order()) return false;
    for (Elem r : R.elements()) seen[G.mul(r, x)] = true;
  }
  return true;
}

}  // namespace

SubgroupLattice subgroup_lattice(const FiniteGroup& G, std::size_t cap) {
  if (G.order() > cap)
    throw Error(ErrorCode::LatticeCapExceeded,
                "order " + std::to_string(G.order()) + " exceeds lattice cap " + std::to_string(cap));
  struct Raw {
    Subgroup rep;
    std::vector<ElementSet> conjugates;
    std::set<std::uint32_t> ext, minimal;
  };
  std::vector<Raw> raw;
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> index;

  auto register_class = [&](Subgroup H) -> std::uint32_t {
    auto it = index.find(H.set);
    if (it != index.end()) return it->second;
    const auto idx = static_cast<std::uint32_t>(raw.size());
    Raw r;
    r.conjugates = conjugacy_orbit(G, H.set);
    for (const auto& c : r.conjugates) index.emplace(c, idx);
    r.rep = std::move(H);
    raw.push_back(std::move(r));
    return idx;
  };

  register_class(trivial_subgroup(G));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Subgroup R = raw[i].rep;
    const Subgroup N = normalizer(G, R);
    std::vector<bool> seen(G.order(), false);
    for (Elem r : R.elements()) seen[r] = true;
    for (Elem g = 0; g < G.order(); ++g) {
      if (seen[g]) continue;
      std::deque<Elem> queue{g};
      seen[g] = true;
      while (!queue.empty()) {
        const Elem x = queue.front();
        queue.pop_front();
        for (Elem r : R.elements()) seen[G.mul(r, x)] = true;
        for (Elem n : N.gens) {
          const Elem y = G.conj(x, n);
          if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
          }
        }
      }
      const Elem one[] = {g};
      Subgroup K = extend(G, R, one);
      const bool minimal = is_minimal_over(G, R, K);
      const std::uint32_t j = register_class(std::move(K));
      raw[i].ext.insert(j);
      if (minimal) raw[i].minimal.insert(j);
    }
  }

  // Canonical representative and deterministic order.
  const std::size_t n = raw.size();
  std::vector<std::vector<Elem>> keys(n);
  std::vector<std::size_t> best(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < raw[i].conjugates.size(); ++c) {
      const auto& e = raw[i].conjugates[c].elements();
      if (c == 0 || e < keys[i]) {
        keys[i] = e;
        best[i] = c;
      }
    }
  }
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (keys[a].size() != keys[b].size()) return keys[a].size() < keys[b].size();
    return keys[a] < keys[b];
  });
  std::vector<std::uint32_t> rank(n);
  for (std::uint32_t k = 0; k < n; ++k) rank[perm[k]] = k;

  SubgroupLattice L;
  L.classes.resize(n);
  L.extensions.resize(n);
  L.minimal_overgroups.resize(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const Raw& r = raw[perm[k]];
    SubgroupClass& c = L.classes[k];
    const ElementSet& s = r.conjugates[best[perm[k]]];
    c.rep = subgroup_from_set(G, s);
    c.order = s.size();
    c.length = r.conjugates.size();
    for (auto j : r.ext) L.extensions[k].push_back(rank[j]);
    for (auto j : r.minimal) L.minimal_overgroups[k].push_back(rank[j]);
    std::sort(L.extensions[k].begin(), L.extensions[k].end());
    std::sort(L.minimal_overgroups[k].begin(), L.minimal_overgroups[k].end());
  }
  for (auto& [set, idx] : index) L.index.emplace(set, rank[idx]);

  // Transitive closure of the extension relation.
  L.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = n; i-- > 0;) {
    L.leq[i][i] = true;
    for (auto j : L.extensions[i])
      for (std::size_t k = 0; k < n; ++k)
        if (L.leq[j][k]) L.leq[i][k] = true;
  }
  classify(G, L);
  return L;
}

Subgroup largest_normal_p_subgroup(const FiniteGroup& G, const Subgroup& H, std::uint64_t p) {
  const Embedded E = as_group(G, H);
  const auto& cc = E.group.classes();
  std::vector<Elem> seeds;
  Subgroup P = trivial_subgroup(E.group);
  for (std::size_t c = 1; c < cc.count(); ++c) {
    if (prime_power_base(cc.orders[c]) != p) continue;
    if (P.contains(cc.reps[c])) continue;
    std::vector<Elem> trial = seeds;
    trial.push_back(cc.reps[c]);
    Subgroup Q = normal_closure(E.group, trial);
    if (is_p_group(Q, p)) {
      seeds = std::move(trial);
      P = std::move(Q);
    }
  }
  std::vector<Elem> elems;
  for (Elem e : P.elements()) elems.push_back(E.into[e]);
  return subgroup_from_set(G, ElementSet::from_elements(G.order(), elems));
}

std::optional<Subgroup> pseudocyclic_kernel(const FiniteGroup& G, const Subgroup& H) {
  if (H.order() == 1) return H;
  for (std::uint64_t p : prime_divisors(H.order())) {
    Subgroup P = largest_normal_p_subgroup(G, H, p);
    const std::size_t m = H.order() / P.order();
    for (Elem h : H.elements()) {
      if (G.elem_order(h) % m != 0) continue;
      std::size_t k = 1;
      Elem x = h;
      while (!P.contains(x)) {
        x = G.mul(x, h);
        ++k;
      }
      if (k == m) return P;
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::uint64_t, Subgroup>> large_residuals(const FiniteGroup& G) {
  std::vector<std::pair<std::uint64_t, Subgroup>> out;
  for (std::uint64_t p : prime_divisors(G.order())) {
    Subgroup R = o_p_residual(G, p);
    const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& q) { return q.second.set == R.set; });
    if (!dup) out.emplace_back(p, std::move(R));
  }
  if (out.empty()) out.emplace_back(0, whole_group(G));
  return out;
}

bool is_large(const FiniteGroup& G, const Subgroup& H) {
  for (const auto& [p, R] : large_residuals(G))
    if (R.set.subset_of(H.set)) return true;
  return false;
}

void classify(const FiniteGroup& G, SubgroupLattice& L) {
  const auto residuals = large_residuals(G);
  for (auto& c : L.classes) {
    c.prime_power = is_prime_power_or_one(c.order);
    c.prime = c.order > 1 ? prime_power_base(c.order) : std::nullopt;
    c.pseudocyclic = pseudocyclic_kernel(G, c.rep).has_value();
    c.large = std::any_of(residuals.begin(), residuals.end(),
                          [&](const auto& r) { return r.second.set.subset_of(c.rep.set); });
  }
}

OliverVerdict is_oliver(const FiniteGroup& G) {
  OliverVerdict v;
  for (Subgroup& H : normal_subgroups(G)) {
    if (!is_prime_power_or_one(G.order() / H.order())) continue;
    if (auto P = pseudocyclic_kernel(G, H)) {
      v.oliver = false;
      v.P = std::move(P);
      v.H = std::move(H);
      return v;
    }
  }
  return v;
}

}  // namespace indrep
