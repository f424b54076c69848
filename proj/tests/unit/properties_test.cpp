#include <gtest/gtest.h>

#include "properties.hpp"

using namespace indrep::testing;

namespace {

std::string summary(const SuiteResult& r) {
  std::string s = std::to_string(r.violations) + " of " + std::to_string(r.instances);
  for (const auto& m : r.messages) s += "\n  " + m;
  return s;
}

}  // namespace

TEST(Properties, CriterionMatchesRank) {
  const auto r = criterion_rank_suite(60, 4, 7);
  EXPECT_TRUE(r.ok()) << summary(r);
  EXPECT_GT(r.instances, 20u);
}

TEST(Properties, Frobenius) {
  const auto r = frobenius_suite(24);
  EXPECT_TRUE(r.ok()) << summary(r);
  EXPECT_GT(r.instances, 0u);
}

TEST(Properties, Lattice) {
  const auto r = lattice_suite(60);
  EXPECT_TRUE(r.ok()) << summary(r);
}

TEST(Properties, ReducedPo) {
  const auto r = reduced_po_suite(6, 3);
  EXPECT_TRUE(r.ok()) << summary(r);
  EXPECT_GE(r.instances, 6u);
}

TEST(Properties, CorpusNames) {
  const auto names = corpus_names(30);
  EXPECT_FALSE(names.empty());
  for (const auto& n : names) EXPECT_NE(n, "G1");
}
