#include <sstream>

#include "helpers.hpp"
#include "indrep_app/commands.hpp"
#include "indrep_app/corpus.hpp"
#include "indrep_app/claims.hpp"

using namespace indrep;
using namespace indrep::app;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(const std::function<int(std::ostream&)>& f) {
  std::ostringstream out, err;
  const int code = run_guarded([&] { return f(out); }, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Corpus, Fingerprints) {
  for (const auto& e : corpus()) {
    if (e.order > 1000) continue;
    const LoadedGroup g = load_entry(e);
    EXPECT_EQ(g.group->order(), e.order) << e.name;
    EXPECT_EQ(g.group->nclasses(), e.nclasses) << e.name;
  }
  EXPECT_EQ(find_entry("nosuch"), nullptr);
}

TEST(Corpus, CorruptedEntryRejected) {
  CorpusEntry e = *find_entry("S4");
  e.order = 25;
  EXPECT_ERROR(load_entry(e), ErrorCode::GroupMismatch);
  e = *find_entry("A5");
  e.nclasses = 4;
  EXPECT_ERROR(load_entry(e), ErrorCode::GroupMismatch);
}

TEST(Corpus, GroupArguments) {
  EXPECT_EQ(load_group("sl2:3").group->order(), 24u);
  EXPECT_EQ(load_group("gl2:3").group->order(), 48u);
  EXPECT_EQ(load_group("C12").group->order(), 12u);
  EXPECT_ERROR(load_group("sl2:6"), ErrorCode::UnsupportedQ);
  EXPECT_ERROR(load_group("/no/such/file.grp"), ErrorCode::ParseError);
}

TEST(Commands, ExitCodes) {
  GlobalOptions g;
  EXPECT_EQ(run([&](std::ostream& o) { return cmd_info("SL25", g, o); }).code, Ok);
  EXPECT_EQ(run([&](std::ostream& o) { return cmd_info("nosuch", g, o); }).code, InputError);
  EXPECT_EQ(run([&](std::ostream& o) { return cmd_smith_verify("SL25", "V5a", "V4a+V1a", g, o); }).code,
            VerificationFailed);
  EXPECT_EQ(run([&](std::ostream& o) { return cmd_smith_verify("SL25", "V9z", "V5a", g, o); }).code, InputError);
  GlobalOptions capped = g;
  capped.lattice_cap = 50;
  EXPECT_EQ(run([&](std::ostream& o) { return cmd_smith_search("SL25", 64, capped, o); }).code, BudgetExceeded);
  GlobalOptions tiny = g;
  tiny.max_order = 10;
  EXPECT_EQ(run([&](std::ostream& o) { return cmd_info("S4", tiny, o); }).code, BudgetExceeded);
}

TEST(Commands, InfoAndTables) {
  GlobalOptions g;
  const Outcome info = run([&](std::ostream& o) { return cmd_info("SL25", g, o); });
  EXPECT_NE(info.out.find("120"), std::string::npos);
  const Outcome real = run([&](std::ostream& o) { return cmd_chartab("SL25", true, g, o); });
  EXPECT_EQ(real.code, Ok);
  EXPECT_NE(real.out.find("V12a"), std::string::npos);
  g.format = Format::Tsv;
  const Outcome tsv = run([&](std::ostream& o) { return cmd_chartab("S3", false, g, o); });
  EXPECT_NE(tsv.out.find('\t'), std::string::npos);
}

TEST(Commands, Sweep) {
  GlobalOptions g;
  const Outcome r = run([&](std::ostream& o) { return cmd_sl2gl2({2, 3, 5}, g, o); });
  EXPECT_EQ(r.code, Ok);
  EXPECT_NE(r.out.find("5"), std::string::npos);
}

TEST(Commands, SearchSL25) {
  GlobalOptions g;
  const Outcome r = run([&](std::ostream& o) { return cmd_smith_search("SL25", 64, g, o); });
  EXPECT_EQ(r.code, Ok);
  EXPECT_NE(r.out.find("48"), std::string::npos);
}

TEST(Reproduce, DeterministicAndStableUnderWaiver) {
  GlobalOptions g;
  const Outcome a = run([&](std::ostream& o) { return cmd_reproduce_paper(g, o); });
  const Outcome b = run([&](std::ostream& o) { return cmd_reproduce_paper(g, o); });
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, VerificationFailed);
  g.waive_orientability = true;
  const Outcome w = run([&](std::ostream& o) { return cmd_reproduce_paper(g, o); });
  auto verdicts = [](const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);)
      if (line.rfind("PASS", 0) == 0 || line.rfind("FAIL", 0) == 0) v.push_back(line.substr(0, line.find(' ', 5)));
    return v;
  };
  EXPECT_EQ(verdicts(a.out), verdicts(w.out));
  EXPECT_FALSE(verdicts(a.out).empty());
}

TEST(Claims, SweepAndRanks) {
  for (const auto& c : claims_mono_sweep()) EXPECT_TRUE(c.pass) << c.anchor << ": " << c.detail;
  for (const auto& c : claims_po_ranks()) EXPECT_TRUE(c.pass) << c.anchor << ": " << c.detail;
  for (const auto& c : claims_normal_mono()) EXPECT_TRUE(c.pass) << c.anchor << ": " << c.detail;
}

TEST(Claims, PublishedPairUnderRepairedLabels) {
  const auto& ctx = sl25_context();
  EXPECT_FALSE(ctx.unmatched.empty());
  const auto repaired = repaired_labels(*ctx.analysis, ctx.exact);
  ASSERT_EQ(repaired.size(), 1u);
  const auto& fx = sl25_fixture();
  const auto U = build_module(*ctx.analysis, fx.U, repaired[0]);
  const auto V = build_module(*ctx.analysis, fx.V, repaired[0]);
  ASSERT_TRUE(U && V);
  EXPECT_EQ(dimension(ctx.analysis->real(), *U), 48);
  EXPECT_TRUE(smith_matched(*ctx.analysis, *U, *V).overall());
}
