#include "nefcone/bound_propagation.hpp"
#include "nefcone/exclusion_prover.hpp"
#include "nefcone/finiteness.hpp"
#include "nefcone/ns_lattice.hpp"

#include <benchmark/benchmark.h>

using namespace nefcone;

static void BM_Intersect(benchmark::State& state) {
  const Genus g(4);
  const DivClass u(g, 16, 7), v(g, 5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(intersect(u, v));
}
BENCHMARK(BM_Intersect);

static void BM_Certify(benchmark::State& state) {
  const CertificateProblem p{4, Rational(2), 16, 7};
  for (auto _ : state) benchmark::DoNotOptimize(certify(p));
}
BENCHMARK(BM_Certify);

static void BM_Search(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_best_ratio(4, Rational(2), state.range(0)));
}
BENCHMARK(BM_Search)->Arg(7)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_TauTable(benchmark::State& state) {
  const Registry reg = Registry::builtin();
  for (auto _ : state) benchmark::DoNotOptimize(emit_table(state.range(0), reg));
}
BENCHMARK(BM_TauTable)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_CandidateTaus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(candidate_taus(5, Rational(5, 2)));
}
BENCHMARK(BM_CandidateTaus)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
