#include "helpers.hpp"
#include "indrep/search.hpp"
#include "indrep_app/corpus.hpp"

using namespace indrep;

namespace {

AnalysisPtr analysis(const char* name) { return app::analyze(app::load_group(name)); }

}  // namespace

TEST(Search, SL25MinimalPair) {
  const auto A = analysis("SL25");
  const SearchResult r = smith_search(*A);
  ASSERT_TRUE(r.min_dim.has_value());
  EXPECT_EQ(*r.min_dim, 48);
  ASSERT_EQ(r.pairs.size(), 1u);
  const auto& [U, V] = r.pairs[0];
  EXPECT_NE(U, V);
  EXPECT_TRUE(U.is_genuine() && V.is_genuine());
  EXPECT_EQ(dimension(A->real(), U), 48);
  const SmithReport rep = smith_matched(*A, U, V);
  EXPECT_TRUE(rep.overall());
  EXPECT_FALSE(rep.isomorphic);
  EXPECT_GT(r.nodes, 0u);
}

TEST(Search, BelowMinimumIsEmpty) {
  const auto A = analysis("SL25");
  SearchOptions o;
  o.max_dim = 47;
  EXPECT_FALSE(smith_search(*A, o).min_dim.has_value());
}

TEST(Search, NodeBudget) {
  const auto A = analysis("SL25");
  SearchOptions o;
  o.node_cap = 10;
  EXPECT_ERROR(smith_search(*A, o), ErrorCode::SearchBudgetExceeded);
}

TEST(Search, GroupsWithoutPairs) {
  for (const char* name : {"C2", "C6", "S4", "A4"}) {
    const SearchResult r = smith_search(*analysis(name));
    EXPECT_FALSE(r.min_dim.has_value()) << name;
    EXPECT_TRUE(r.pairs.empty()) << name;
  }
}

TEST(Gap, Verdicts) {
  const GapResult c30 = gap_group_check(*analysis("C30"));
  EXPECT_TRUE(c30.gap) << c30.reason;
  const GapResult c2 = gap_group_check(*analysis("C2"));
  EXPECT_FALSE(c2.gap);
  EXPECT_TRUE(c2.p_and_large.has_value());
  const GapResult s = gap_group_check(*analysis("SL25"));
  EXPECT_TRUE(s.gap);
  ASSERT_TRUE(s.witness.has_value());
  const auto A = analysis("SL25");
  EXPECT_TRUE(gap_check(*A, *s.witness, GapMode::Strong).pass);
  EXPECT_TRUE(large_vanishing(*A, *s.witness).pass);
}
