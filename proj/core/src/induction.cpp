#include "indrep/induction.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "indrep/error.hpp"
#include "indrep/number_theory.hpp"

namespace indrep {

Fusion class_fusion(const FiniteGroup& G, const Embedded& H) {
  const auto& hc = H.group.classes();
  const auto& hr = H.group.real_classes();
  if (H.into.size() != H.group.order()) throw Error(ErrorCode::NotSubgroup, "embedding has the wrong size");
  Fusion f;
  f.classes.resize(hc.count());
  for (std::size_t i = 0; i < hc.count(); ++i) f.classes[i] = G.class_of(H.into[hc.reps[i]]);
  f.real_classes.resize(hr.count());
  for (std::size_t i = 0; i < hr.count(); ++i) f.real_classes[i] = G.real_classes().real_of_class[f.classes[hr.members[i][0]]];
  f.b = hc.count();
  f.b_real = hr.count();
  f.a = std::set<std::uint32_t>(f.classes.begin(), f.classes.end()).size();
  f.a_real = std::set<std::uint32_t>(f.real_classes.begin(), f.real_classes.end()).size();
  return f;
}

namespace {

// Units of H (classes or real classes, `unit_of_class`) sharing a key are
// merged; witness is the lex-least member.
MonoVerdict verdict_from_keys(const FiniteGroup& G, const Embedded& H, const std::vector<std::uint32_t>& key_of_class,
                              const std::vector<std::uint32_t>& unit_of_class) {
  MonoVerdict v;
  std::vector<std::set<std::uint32_t>> units;
  for (std::size_t c = 0; c < key_of_class.size(); ++c) {
    const auto k = key_of_class[c];
    if (k >= units.size()) units.resize(k + 1);
    units[k].insert(unit_of_class[c]);
  }
  std::vector<std::size_t> count(units.size());
  for (std::size_t k = 0; k < units.size(); ++k) count[k] = units[k].size();
  const auto& hc = H.group.classes();
  std::optional<Elem> best;
  for (std::size_t i = 0; i < hc.count(); ++i) {
    if (count[key_of_class[i]] < 2) continue;
    v.mono = false;
    for (Elem h : hc.members[i]) {
      const Elem g = H.into[h];
      if (!best || G.lex_less(g, *best)) best = g;
    }
  }
  if (best) {
    v.witness = best;
    const auto hidx = H.group.index_of(G.element(*best));
    const auto key = key_of_class[H.group.class_of(hidx)];
    for (std::uint32_t i = 0; i < hc.count(); ++i)
      if (key_of_class[i] == key) v.merged.push_back(i);
  }
  return v;
}

}  // namespace

MonoVerdict mono_complex(const FiniteGroup& G, const Embedded& H, const Fusion& f) {
  std::vector<std::uint32_t> unit(f.classes.size());
  for (std::uint32_t c = 0; c < unit.size(); ++c) unit[c] = c;
  return verdict_from_keys(G, H, f.classes, unit);
}

MonoVerdict mono_real(const FiniteGroup& G, const Embedded& H, const Fusion& f) {
  const auto& hr = H.group.real_classes();
  std::vector<std::uint32_t> key(H.group.nclasses());
  for (std::size_t c = 0; c < key.size(); ++c) key[c] = f.real_classes[hr.real_of_class[c]];
  return verdict_from_keys(G, H, key, hr.real_of_class);
}

Character induce_character(const ClassInfoPtr& G_classes, const Fusion& f, const Character& chi) {
  if (!chi.classes || chi.values.size() != f.classes.size())
    throw Error(ErrorCode::NotSubgroup, "character does not belong to the subgroup");
  const ClassInfo& hi = *chi.classes;
  Character out = zero_character(G_classes);
  for (std::size_t i = 0; i < f.classes.size(); ++i) {
    if (chi.values[i].is_zero()) continue;
    const std::uint32_t k = f.classes[i];
    mpq_class scale(mpz_class(static_cast<unsigned long>(G_classes->centralizer_order(k))),
                    mpz_class(static_cast<unsigned long>(hi.centralizer_order(i))));
    scale.canonicalize();
    out.values[k] += chi.values[i] * scale;
  }
  return out;
}

Character restrict_character(const ClassInfoPtr& H_classes, const Fusion& f, const Character& psi) {
  Character out = zero_character(H_classes);
  for (std::size_t i = 0; i < f.classes.size(); ++i) out.values[i] = psi.values.at(f.classes[i]);
  return out;
}

std::vector<std::uint64_t> rank_check_primes() {
  std::mt19937_64 rng(20240611);
  std::vector<std::uint64_t> out;
  while (out.size() < 2) {
    std::uint64_t c = (rng() % (1ull << 30)) | (1ull << 30) | 1ull;
    while (!is_prime(c)) c += 2;
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

namespace {

mpz_class as_integer(const mpq_class& v) {
  if (v.get_den() != 1 || v < 0) throw Error(ErrorCode::InternalInconsistency, "induction multiplicity is not a natural number");
  return v.get_num();
}

}  // namespace

InductionMap induction_map(const FiniteGroup& G, const CharacterTable& TG, const RealIrreducibles& RG,
                           const Embedded& H, const CharacterTable& TH, const RealIrreducibles& RH) {
  InductionMap m;
  m.fusion = class_fusion(G, H);
  const auto& gi = TG.class_info();
  for (const auto& chi : TH.irreducibles()) {
    const Character ind = induce_character(gi, m.fusion, chi);
    std::vector<mpz_class> row;
    for (const auto& psi : TG.irreducibles()) row.push_back(as_integer(inner_product(ind, psi)));
    m.complex.push_back(std::move(row));
  }
  for (const auto& v : RH.list()) {
    const Character ind = induce_character(gi, m.fusion, v.chi);
    std::vector<mpz_class> row;
    for (const auto& w : RG.list()) row.push_back(as_integer(inner_product(ind, w.chi) / w.norm()));
    m.real.push_back(std::move(row));
  }
  m.rank_complex = rank_bareiss(m.complex);
  m.rank_real = rank_bareiss(m.real);
  m.check_primes = rank_check_primes();
  for (const ZMatrix* z : {&m.complex, &m.real}) {
    const std::size_t exact = z == &m.complex ? m.rank_complex : m.rank_real;
    for (auto p : m.check_primes) {
      const std::size_t r = rank_mod_p(*z, p);
      if (r > exact) throw Error(ErrorCode::InternalInconsistency, "modular rank exceeds rational rank");
      m.modular_ranks.push_back(r);
    }
  }
  return m;
}

}  // namespace indrep
