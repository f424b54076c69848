#include "helpers.hpp"
#include "indrep/induction.hpp"
#include "indrep/linear_groups.hpp"
#include "indrep/real_characters.hpp"
#include "indrep/subgroup.hpp"
#include "indrep_app/claims.hpp"
#include "oracles.hpp"

using namespace indrep;
using indrep::testing::group_from;

namespace {

Embedded sl_in_gl(const LinearGroups& L) {
  std::vector<Elem> gens;
  for (const auto& g : L.sl.generators()) gens.push_back(L.gl.index_of(g));
  return as_group(L.gl, generate(L.gl, gens));
}

}  // namespace

TEST(Fusion, WholeGroup) {
  const auto G = group_from("degree 4\n(1 2 3 4)\n(1 2)\n");
  const Embedded E = as_group(G, whole_group(G));
  const Fusion f = class_fusion(G, E);
  EXPECT_EQ(f.a, f.b);
  EXPECT_EQ(f.a_real, f.b_real);
  EXPECT_TRUE(mono_complex(G, E, f).mono);
  const auto T = character_table(G);
  const auto TE = character_table(E.group);
  for (const auto& chi : TE.irreducibles()) EXPECT_GE(T.find(induce_character(T.class_info(), f, chi)), 0);
}

TEST(Fusion, SL2InGL2) {
  const auto L4 = linear_groups(4);
  const Embedded E4 = sl_in_gl(L4);
  const Fusion f4 = class_fusion(L4.gl, E4);
  EXPECT_TRUE(mono_complex(L4.gl, E4, f4).mono);
  EXPECT_TRUE(mono_real(L4.gl, E4, f4).mono);

  const auto L3 = linear_groups(3);
  const Embedded E3 = sl_in_gl(L3);
  const Fusion f3 = class_fusion(L3.gl, E3);
  const MonoVerdict c = mono_complex(L3.gl, E3, f3);
  EXPECT_FALSE(c.mono);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.merged.size(), 2u);
  EXPECT_EQ(L3.gl.elem_order(*c.witness) % 3, 0u);
  EXPECT_TRUE(mono_real(L3.gl, E3, f3).mono);

  const auto L5 = linear_groups(5);
  const Embedded E5 = sl_in_gl(L5);
  EXPECT_FALSE(mono_real(L5.gl, E5, class_fusion(L5.gl, E5)).mono);
}

TEST(Fusion, SweepRows) {
  for (std::uint64_t q : {2, 4, 8}) {
    const auto row = app::sl2gl2_row(q);
    EXPECT_TRUE(row.mono_complex && row.mono_real) << q;
  }
  for (std::uint64_t q : {3, 7, 11}) {
    const auto row = app::sl2gl2_row(q);
    EXPECT_TRUE(!row.mono_complex && row.mono_real) << q;
  }
  for (std::uint64_t q : {5, 9, 13}) {
    const auto row = app::sl2gl2_row(q);
    EXPECT_TRUE(!row.mono_complex && !row.mono_real) << q;
  }
}

TEST(Induction, MatchesTransversalOracle) {
  const auto G = sl2(5);
  const auto T = character_table(G);
  const Elem b = linear_groups(5).named_sl.at("b");
  const Embedded E = as_group(G, generate(G, std::vector<Elem>{b}));
  const Fusion f = class_fusion(G, E);
  const auto TH = character_table(E.group);
  for (const auto& chi : TH.irreducibles()) {
    const Character ind = induce_character(T.class_info(), f, chi);
    EXPECT_EQ(ind, indrep::testing::transversal_induce(G, T.class_info(), E, chi));
    EXPECT_EQ(ind.degree(), 20);
    for (auto m : T.decompose(ind)) EXPECT_GE(m, 0);
  }
  EXPECT_ERROR(induce_character(T.class_info(), f, T[0]), ErrorCode::NotSubgroup);
}

TEST(InductionMap, RanksAgreeWithCriterion) {
  const auto L = linear_groups(5);
  const Embedded E = sl_in_gl(L);
  const auto TG = character_table(L.gl), TH = character_table(E.group);
  const RealIrreducibles RG(TG), RH(TH);
  const InductionMap M = induction_map(L.gl, TG, RG, E, TH, RH);
  EXPECT_EQ(M.complex.size(), 9u);
  EXPECT_FALSE(M.complex_full());
  EXPECT_FALSE(M.real_full());
  EXPECT_LE(M.rank_complex, std::min(M.fusion.a, M.fusion.b));
  ASSERT_EQ(M.modular_ranks.size(), 4u);
  EXPECT_EQ(M.modular_ranks[0], M.rank_complex);
  EXPECT_EQ(M.modular_ranks[2], M.rank_real);
  EXPECT_EQ(M.check_primes, rank_check_primes());
  for (std::size_t i = 0; i < M.complex.size(); ++i) {
    Character rebuilt = zero_character(TG.class_info());
    for (std::size_t j = 0; j < TG.size(); ++j) {
      EXPECT_GE(M.complex[i][j], 0);
      rebuilt += TG[j] * mpq_class(M.complex[i][j]);
    }
    EXPECT_EQ(rebuilt, induce_character(TG.class_info(), M.fusion, TH[i]));
  }
}

TEST(InductionMap, WholeGroupIsIdentity) {
  const auto G = group_from("degree 5\n(1 2 3 4 5)\n(1 2 3)\n");
  const Embedded E = as_group(G, whole_group(G));
  const auto TG = character_table(G), TH = character_table(E.group);
  const InductionMap M = induction_map(G, TG, RealIrreducibles(TG), E, TH, RealIrreducibles(TH));
  EXPECT_EQ(M.rank_complex, G.nclasses());
  EXPECT_EQ(M.rank_real, G.nrealclasses());
}

TEST(InductionMap, CheckPrimesAreFixed) {
  const auto p = rank_check_primes();
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NE(p[0], p[1]);
  EXPECT_EQ(p, rank_check_primes());
}
