#include "properties.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "indrep/certificate.hpp"
#include "indrep/error.hpp"
#include "indrep/induction.hpp"
#include "indrep/linalg.hpp"
#include "indrep/linear_groups.hpp"
#include "indrep/smith.hpp"
#include "indrep_app/corpus.hpp"
#include "oracles.hpp"

namespace indrep::testing {

void SuiteResult::fail(const std::string& what) {
  ++violations;
  if (messages.size() < 20) messages.push_back(what);
}

std::vector<std::string> corpus_names(std::size_t max_order) {
  std::vector<std::string> out;
  for (const auto& e : app::corpus())
    if (e.order <= max_order && e.name != "G1" && e.name != "G2") out.push_back(e.name);
  return out;
}

namespace {

struct Pair {
  std::string name;
  GroupPtr G;
  Subgroup H;
};

void check_pair(SuiteResult& r, const std::string& name, const FiniteGroup& G, const CharacterTable& TG,
                const RealIrreducibles& RG, const Subgroup& H) {
  const Embedded E = as_group(G, H);
  const Fusion f = class_fusion(G, E);
  const bool mc = mono_complex(G, E, f).mono, mr = mono_real(G, E, f).mono;
  const CharacterTable TH = character_table(E.group);
  const RealIrreducibles RH(TH);
  const InductionMap M = induction_map(G, TG, RG, E, TH, RH);
  ++r.instances;
  if (mc != M.complex_full() || mr != M.real_full())
    r.fail(name + " |H|=" + std::to_string(H.order()) + ": criterion " + std::to_string(mc) + "/" +
           std::to_string(mr) + " vs rank " + std::to_string(M.rank_complex) + "/" + std::to_string(M.rank_real));
}

std::vector<std::pair<std::string, app::LoadedGroup>> normal_pair_groups() {
  std::vector<std::pair<std::string, app::LoadedGroup>> out;
  for (const char* n : {"C3xS4", "S3xA4", "SL25xC2", "G4", "AutA6", "C6xC6"}) out.emplace_back(n, app::load_group(n));
  return out;
}

std::map<Elem, Elem> local_index(const Embedded& E) {
  std::map<Elem, Elem> m;
  for (Elem h = 0; h < E.into.size(); ++h) m[E.into[h]] = h;
  return m;
}

}  // namespace

SuiteResult criterion_rank_suite(std::size_t max_order, std::size_t random_pairs, std::uint64_t seed) {
  SuiteResult r;
  for (const auto& name : corpus_names(max_order)) {
    const auto L = app::load_group(name);
    const auto A = app::analyze(L);
    for (const auto& cls : A->lattice().classes) check_pair(r, name, *L.group, A->table(), A->real(), cls.rep);
  }
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const LinearGroups LG = linear_groups(q);
    std::vector<Elem> gens;
    for (const auto& g : LG.sl.generators()) gens.push_back(LG.gl.index_of(g));
    const CharacterTable T = character_table(LG.gl);
    check_pair(r, "GL(2," + std::to_string(q) + ")", LG.gl, T, RealIrreducibles(T), generate(LG.gl, gens));
  }
  std::mt19937_64 rng(seed);
  const auto small = corpus_names(200);
  for (std::size_t k = 0; k < random_pairs; ++k) {
    const auto& name = small[rng() % small.size()];
    const auto L = app::load_group(name);
    const FiniteGroup& G = *L.group;
    std::vector<Elem> gens;
    for (std::size_t j = 0, n = 1 + rng() % 2; j < n; ++j) gens.push_back(static_cast<Elem>(rng() % G.order()));
    const CharacterTable T = L.table ? *L.table : character_table(G);
    check_pair(r, name + " random", G, T, RealIrreducibles(T), generate(G, gens));
  }
  return r;
}

SuiteResult frobenius_suite(std::size_t max_order) {
  SuiteResult r;
  for (const auto& name : corpus_names(max_order)) {
    const auto L = app::load_group(name);
    const auto A = app::analyze(L);
    const FiniteGroup& G = *L.group;
    const auto& TG = A->table();
    for (const auto& cls : A->lattice().classes) {
      const Embedded E = as_group(G, cls.rep);
      const Fusion f = class_fusion(G, E);
      const CharacterTable TH = character_table(E.group);
      for (const auto& chi : TH.irreducibles()) {
        ++r.instances;
        const Character ind = induce_character(TG.class_info(), f, chi);
        if (!(ind == transversal_induce(G, TG.class_info(), E, chi)))
          r.fail(name + " |H|=" + std::to_string(cls.order) + ": induced character differs from the transversal sum");
        for (const auto& psi : TG.irreducibles())
          if (inner_product(ind, psi) != inner_product(chi, restrict_character(TH.class_info(), f, psi)))
            r.fail(name + " |H|=" + std::to_string(cls.order) + ": Frobenius reciprocity fails");
      }
    }
  }
  return r;
}

SuiteResult orthogonality_suite() {
  SuiteResult r;
  auto check = [&](const std::string& name, const CharacterTable& T, std::size_t order) {
    ++r.instances;
    const auto rep = check_orthogonality(T.classes(), T.irreducibles());
    long long sum = 0;
    for (auto d : T.degrees()) sum += d * d;
    if (!rep.rows || !rep.columns || static_cast<std::size_t>(sum) != order || T.size() != T.classes().count())
      r.fail(name + ": orthogonality or degree sum fails");
  };
  for (const auto& name : corpus_names(1'000'000)) {
    const auto L = app::load_group(name);
    check(name, L.table ? *L.table : character_table(*L.group), L.group->order());
  }
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8}) {
    const LinearGroups LG = linear_groups(q);
    check("SL(2," + std::to_string(q) + ")", character_table(LG.sl), LG.sl.order());
    check("GL(2," + std::to_string(q) + ")", character_table(LG.gl), LG.gl.order());
  }
  return r;
}

SuiteResult fixed_dim_suite() {
  SuiteResult r;
  for (const auto& name : corpus_names(1'000'000)) {
    const auto L = app::load_group(name);
    AnalysisPtr A;
    try {
      A = app::analyze(L);
    } catch (const Error& e) {
      r.fail(name + ": " + e.what());
      continue;
    }
    if (!A->has_lattice()) {
      for (const auto& row : A->residual_fixed_dims()) {
        ++r.instances;
        for (auto d : row)
          if (d < 0) r.fail(name + ": negative residual fixed dimension");
      }
      continue;
    }
    const auto& T = A->fixed_dim_table();
    const auto& lat = A->lattice();
    const std::size_t top = lat.classes.size() - 1;
    for (std::size_t i = 0; i < T.size(); ++i) {
      ++r.instances;
      const long long deg = A->real()[i].degree();
      if (T[i][0] != deg) r.fail(name + ": fixed dimension at the trivial subgroup is not the degree");
      const bool trivial = deg == 1 && T[i][top] == 1;
      if (T[i][top] != (trivial ? 1 : 0)) r.fail(name + ": G-fixed part of a nontrivial irreducible");
      for (std::size_t a = 0; a < T[i].size(); ++a) {
        if (T[i][a] < 0 || T[i][a] > deg) r.fail(name + ": fixed dimension out of range");
        for (std::size_t b = 0; b < T[i].size(); ++b)
          if (lat.leq[a][b] && T[i][b] > T[i][a]) r.fail(name + ": fixed dimension grows with the subgroup");
      }
    }
  }
  return r;
}

SuiteResult dimension_formula_suite() {
  SuiteResult r;
  std::size_t pairs = 0;
  for (const auto& [name, L] : normal_pair_groups()) {
    const auto GA = app::analyze(L);
    const FiniteGroup& G = *L.group;
    for (const auto& entry : normal_mono_set(G)) {
      const Embedded E = as_group(G, entry.subgroup);
      const GroupAnalysis NA(std::make_shared<const FiniteGroup>(E.group));
      const Fusion f = class_fusion(G, E);
      const auto local = local_index(E);
      ++pairs;
      for (std::size_t i = 0; i < NA.real().size(); ++i) {
        const VirtualModule V = irreducible_module(NA.real(), i);
        const VirtualModule W = induce_module(*GA, NA, E, f, V);
        for (const auto& K : GA->lattice().classes) {
          ++r.instances;
          std::vector<Elem> meet;
          for (Elem k : K.rep.elements())
            if (auto it = local.find(k); it != local.end()) meet.push_back(it->second);
          const ElementSet KN = ElementSet::from_elements(E.group.order(), meet);
          mpq_class rhs(static_cast<unsigned long>(G.order() * KN.size()),
                        static_cast<unsigned long>(E.group.order() * K.order));
          rhs.canonicalize();
          rhs *= static_cast<long>(fixed_dim(NA, V, KN));
          if (rhs != static_cast<long>(fixed_dim(*GA, W, K.rep.set)))
            r.fail(name + " N of order " + std::to_string(E.group.order()) + ", K of order " + std::to_string(K.order) +
                   ": dimension formula fails for " + NA.real()[i].label);
        }
      }
    }
  }
  if (pairs < 5) r.fail("only " + std::to_string(pairs) + " normal pairs");
  return r;
}

SuiteResult reduced_po_suite(std::size_t samples, std::uint64_t seed) {
  SuiteResult r;
  struct Case {
    std::string name;
    AnalysisPtr GA;
    Embedded E;
    std::shared_ptr<GroupAnalysis> NA;
    Fusion f;
    std::vector<std::vector<long long>> basis;
  };
  std::vector<Case> cases;
  auto add = [&](const std::string& name, const app::LoadedGroup& L, const Subgroup& N) {
    Case c{name, app::analyze(L), as_group(*L.group, N), nullptr, {}, {}};
    c.NA = std::make_shared<GroupAnalysis>(std::make_shared<const FiniteGroup>(c.E.group));
    c.f = class_fusion(*L.group, c.E);
    std::vector<std::size_t> all(c.NA->real().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    QMatrix M = po_constraint_matrix(*c.NA, all);
    std::vector<mpq_class> fixed(all.size(), 0);
    fixed[0] = 1;
    M.push_back(fixed);
    for (const auto& v : nullspace(M, all.size())) {
      std::vector<long long> b;
      for (const auto& z : primitive_integer_vector(v)) b.push_back(z.get_si());
      c.basis.push_back(std::move(b));
    }
    if (!c.basis.empty()) cases.push_back(std::move(c));
  };
  {
    const auto L = app::load_group("SL25xC2");
    for (const auto& N : normal_subgroups(*L.group))
      if (N.order() == 120) add("SL25xC2", L, N);
  }
  {
    const auto L = app::load_group("G4");
    for (const auto& N : normal_subgroups(*L.group))
      if (N.order() == 288) add("G4", L, N);
  }
  {
    const auto L = app::load_group("GL25");
    for (const auto& N : normal_subgroups(*L.group))
      if (N.order() == 120 || N.order() == 240) add("GL25", L, N);
  }
  if (cases.empty()) {
    r.fail("no normal pair with nonzero reduced PO");
    return r;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const Case& c = cases[s % cases.size()];
    VirtualModule x = zero_module(c.NA->real());
    for (const auto& b : c.basis) {
      const long long k = static_cast<long long>(rng() % 7) - 3;
      for (std::size_t i = 0; i < b.size(); ++i) x.mult[i] += k * b[i];
    }
    if (x.is_zero()) x.mult = c.basis[0];
    const VirtualModule U = x.positive_part(), V = x.negative_part();
    ++r.instances;
    if (!reduced_po_member(*c.NA, U, V)) {
      r.fail(c.name + ": sample is not in reduced PO of N");
      continue;
    }
    const VirtualModule IU = induce_module(*c.GA, *c.NA, c.E, c.f, U), IV = induce_module(*c.GA, *c.NA, c.E, c.f, V);
    if (!reduced_po_member(*c.GA, IU, IV))
      r.fail(c.name + " N of order " + std::to_string(c.E.group.order()) + ": induced difference leaves reduced PO");
  }
  return r;
}

SuiteResult lattice_suite(std::size_t max_order) {
  SuiteResult r;
  auto check = [&](const std::string& name, const FiniteGroup& G) {
    ++r.instances;
    const auto msg = compare_lattices(G, subgroup_lattice(G), brute_force_lattice(G));
    if (!msg.empty()) r.fail(name + ": " + msg);
  };
  for (const auto& name : corpus_names(max_order)) check(name, *app::load_group(name).group);
  for (std::uint64_t q : {2, 3, 4}) {
    const LinearGroups LG = linear_groups(q);
    check("SL(2," + std::to_string(q) + ")", LG.sl);
    if (LG.gl.order() <= max_order) check("GL(2," + std::to_string(q) + ")", LG.gl);
  }
  return r;
}

}  // namespace indrep::testing
