#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace indrep::testing {

namespace {

ElementSet close(const FiniteGroup& G, std::vector<Elem> seed) {
  ElementSet S(G.order());
  S.insert(G.identity());
  std::vector<Elem> gens;
  for (Elem s : seed)
    if (S.insert(s)) gens.push_back(s);
  std::vector<Elem> queue(S.elements().begin(), S.elements().end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Elem g : gens) {
      const Elem y = G.mul(queue[i], g);
      if (S.insert(y)) queue.push_back(y);
    }
  return S;
}

}  // namespace

BruteLattice brute_force_lattice(const FiniteGroup& G) {
  std::set<ElementSet> all;
  for (Elem g = 0; g < G.order(); ++g) all.insert(close(G, {g}));
  std::vector<ElementSet> list(all.begin(), all.end());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (list[i].subset_of(list[j]) || list[j].subset_of(list[i])) continue;
      std::vector<Elem> seed = list[i].elements();
      seed.insert(seed.end(), list[j].elements().begin(), list[j].elements().end());
      ElementSet J = close(G, seed);
      if (all.insert(J).second) list.push_back(std::move(J));
    }
  BruteLattice out;
  std::set<ElementSet> done;
  for (const auto& S : list) {
    if (done.count(S)) continue;
    std::set<ElementSet> orbit;
    for (Elem g = 0; g < G.order(); ++g) {
      ElementSet T(G.order());
      for (Elem x : S.elements()) T.insert(G.conj(x, g));
      orbit.insert(std::move(T));
    }
    done.insert(orbit.begin(), orbit.end());
    out.classes.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

std::string compare_lattices(const FiniteGroup& G, const SubgroupLattice& L, const BruteLattice& B) {
  if (L.classes.size() != B.classes.size())
    return "class count " + std::to_string(L.classes.size()) + " vs brute force " + std::to_string(B.classes.size());
  std::vector<std::size_t> to_brute(L.classes.size());
  for (std::size_t i = 0; i < L.classes.size(); ++i) {
    const auto& rep = L.classes[i].rep.set;
    auto it = std::find_if(B.classes.begin(), B.classes.end(), [&](const auto& cls) {
      return std::find(cls.begin(), cls.end(), rep) != cls.end();
    });
    if (it == B.classes.end()) return "class " + std::to_string(i) + " not found by brute force";
    to_brute[i] = static_cast<std::size_t>(it - B.classes.begin());
    if (it->size() != L.classes[i].length) return "class " + std::to_string(i) + " has the wrong length";
    if (rep.size() != L.classes[i].order) return "class " + std::to_string(i) + " has the wrong order";
  }
  if (std::set<std::size_t>(to_brute.begin(), to_brute.end()).size() != to_brute.size())
    return "two classes map to one brute-force class";
  for (std::size_t i = 0; i < L.classes.size(); ++i)
    for (std::size_t j = 0; j < L.classes.size(); ++j) {
      const auto& cj = L.classes[j].rep.set;
      const auto& conj_i = B.classes[to_brute[i]];
      const bool below = std::any_of(conj_i.begin(), conj_i.end(), [&](const ElementSet& s) { return s.subset_of(cj); });
      if (below != L.leq[i][j])
        return "containment of class " + std::to_string(i) + " in class " + std::to_string(j) + " disagrees";
    }
  (void)G;
  return {};
}

Character transversal_induce(const FiniteGroup& G, const ClassInfoPtr& G_classes, const Embedded& H,
                             const Character& chi) {
  std::map<Elem, Elem> local;
  for (Elem h = 0; h < H.into.size(); ++h) local[H.into[h]] = h;
  std::vector<Elem> transversal;
  std::vector<bool> seen(G.order(), false);
  for (Elem t = 0; t < G.order(); ++t) {
    if (seen[t]) continue;
    transversal.push_back(t);
    for (Elem h : H.into) seen[G.mul(h, t)] = true;
  }
  Character out = zero_character(G_classes);
  const auto& cc = G.classes();
  for (std::size_t c = 0; c < cc.count(); ++c) {
    const Elem g = cc.reps[c];
    for (Elem t : transversal) {
      const Elem x = G.mul(G.mul(t, g), G.inv(t));
      auto it = local.find(x);
      if (it != local.end()) out.values[c] += chi.values[H.group.class_of(it->second)];
    }
  }
  return out;
}

}  // namespace indrep::testing
