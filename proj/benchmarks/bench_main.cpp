#include <benchmark/benchmark.h>

#include "indrep/certificate.hpp"
#include "indrep/linear_groups.hpp"
#include "indrep/search.hpp"
#include "indrep_app/corpus.hpp"

using namespace indrep;

static void BM_BuildLinear(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(linear_groups(q));
}
BENCHMARK(BM_BuildLinear)->Arg(5)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_CharacterTable(benchmark::State& state, const char* name) {
  const auto G = app::load_group(name).group;
  for (auto _ : state) benchmark::DoNotOptimize(character_table(*G));
}
BENCHMARK_CAPTURE(BM_CharacterTable, SL25, "SL25")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CharacterTable, GL25, "GL25")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CharacterTable, AutA6, "AutA6")->Unit(benchmark::kMillisecond);

static void BM_Lattice(benchmark::State& state, const char* name) {
  const auto G = app::load_group(name).group;
  for (auto _ : state) benchmark::DoNotOptimize(subgroup_lattice(*G));
}
BENCHMARK_CAPTURE(BM_Lattice, SL25, "SL25")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Lattice, G4, "G4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Lattice, AutA6, "AutA6")->Unit(benchmark::kMillisecond);

static void BM_InductionMap(benchmark::State& state) {
  const auto L = linear_groups(static_cast<std::uint64_t>(state.range(0)));
  std::vector<Elem> gens;
  for (const auto& g : L.sl.generators()) gens.push_back(L.gl.index_of(g));
  const Embedded E = as_group(L.gl, generate(L.gl, gens));
  const auto TG = character_table(L.gl), TH = character_table(E.group);
  const RealIrreducibles RG(TG), RH(TH);
  for (auto _ : state) benchmark::DoNotOptimize(induction_map(L.gl, TG, RG, E, TH, RH));
}
BENCHMARK(BM_InductionMap)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_SmithSearch(benchmark::State& state) {
  const auto A = app::analyze(app::load_group("SL25"));
  for (auto _ : state) benchmark::DoNotOptimize(smith_search(*A));
}
BENCHMARK(BM_SmithSearch)->Unit(benchmark::kMillisecond);

static void BM_NormalMonoSet(benchmark::State& state, const char* name) {
  const auto G = app::load_group(name).group;
  for (auto _ : state) benchmark::DoNotOptimize(normal_mono_set(*G));
}
BENCHMARK_CAPTURE(BM_NormalMonoSet, G4, "G4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_NormalMonoSet, AutA6, "AutA6")->Unit(benchmark::kMillisecond);

static void BM_PoRanks(benchmark::State& state) {
  const auto A = app::analyze(app::load_group("C6xA4xD30"), {.lattice_cap = 2000, .build_lattice = false});
  for (auto _ : state) benchmark::DoNotOptimize(po_lattice_ranks(*A));
}
BENCHMARK(BM_PoRanks)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
