// Acceptance run: one PASS/FAIL line per criterion, details indented below.
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "indrep_app/claims.hpp"
#include "properties.hpp"

namespace {

using indrep::app::Claim;
using indrep::testing::SuiteResult;

// Pinned thresholds. Every comparison below is exact; these are the only knobs.
constexpr std::size_t kRankMaxOrder = 500;
constexpr std::size_t kRandomPairs = 24;
constexpr std::size_t kMinRandomPairs = 20;
constexpr std::uint64_t kSeed = 20240611;
constexpr double kSearchBudgetSeconds = 300.0;
constexpr std::size_t kDimensionFormulaInstances = 100;
constexpr std::size_t kFrobeniusMaxOrder = 120;
constexpr std::size_t kReducedPoSamples = 60;
constexpr std::size_t kMinReducedPoSamples = 50;
constexpr std::size_t kLatticeMaxOrder = 200;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;
};

Outcome from_claims(const std::vector<Claim>& claims) {
  Outcome o;
  std::size_t passed = 0;
  for (const auto& c : claims) {
    passed += c.pass;
    o.pass = o.pass && c.pass;
    o.details.push_back(std::string(c.pass ? "ok   " : "FAIL ") + c.anchor + ": " + c.detail);
    if (!c.pass)
      for (const auto& n : c.notes) o.details.push_back("       " + n);
  }
  o.summary = std::to_string(passed) + "/" + std::to_string(claims.size()) + " claims";
  return o;
}

void add_suite(Outcome& o, const std::string& name, const SuiteResult& r, std::size_t min_instances = 1) {
  const bool ok = r.ok() && r.instances >= min_instances;
  o.pass = o.pass && ok;
  o.details.push_back(std::string(ok ? "ok   " : "FAIL ") + name + ": " + std::to_string(r.instances) +
                      " instances, " + std::to_string(r.violations) + " violations");
  for (const auto& m : r.messages) o.details.push_back("       " + m);
}

}  // namespace

int main() {
  using namespace indrep;
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, [] { return from_claims(app::claims_mono_sweep()); }},
      {2,
       [] {
         Outcome o;
         add_suite(o, "criterion vs rank", testing::criterion_rank_suite(kRankMaxOrder, kRandomPairs, kSeed));
         o.summary = "corpus pairs up to order " + std::to_string(kRankMaxOrder) + ", " +
                     std::to_string(kRandomPairs) + " random pairs";
         o.pass = o.pass && kRandomPairs >= kMinRandomPairs;
         return o;
       }},
      {3, [] { return from_claims(app::claims_sl25_tables()); }},
      {4,
       [] {
         const auto t0 = std::chrono::steady_clock::now();
         Outcome o = from_claims(app::claims_sl25_pair());
         const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
         if (s > kSearchBudgetSeconds) {
           o.pass = false;
           o.details.push_back("FAIL time budget exceeded");
         }
         return o;
       }},
      {5, [] { return from_claims(app::claims_po_ranks()); }},
      {6, [] { return from_claims(app::claims_normal_mono()); }},
      {7,
       [] {
         Outcome o;
         add_suite(o, "(a) dimension formula", testing::dimension_formula_suite(), kDimensionFormulaInstances);
         add_suite(o, "(b) Frobenius reciprocity and induction oracle", testing::frobenius_suite(kFrobeniusMaxOrder));
         add_suite(o, "(c) orthogonality", testing::orthogonality_suite());
         add_suite(o, "(d) fixed dimensions", testing::fixed_dim_suite());
         add_suite(o, "(e) reduced PO under induction", testing::reduced_po_suite(kReducedPoSamples, kSeed),
                   kMinReducedPoSamples);
         add_suite(o, "(f) lattice vs brute force", testing::lattice_suite(kLatticeMaxOrder));
         o.summary = "6 property suites";
         return o;
       }},
      {8, [] { return from_claims(app::claims_certificate()); }},
  };

  bool all = true;
  for (const auto& [n, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.summary << '\n';
    for (const auto& d : o.details) std::cout << "    " << d << '\n';
    std::cout.flush();
  }
  return all ? 0 : 1;
}
