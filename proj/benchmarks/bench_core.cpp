#include <benchmark/benchmark.h>

#include "posmap/posmap.hpp"

using namespace posmap;

namespace {

BipartiteState random_state(Index d, std::uint64_t seed) {
  Rng rng(seed);
  return BipartiteState(random_density(d * d, d * d, rng), {d, d});
}

void BM_EigHermitian(benchmark::State& st) {
  Rng rng(1);
  HermitianMatrix m = random_hermitian(st.range(0), rng);
  for (auto _ : st) benchmark::DoNotOptimize(eig_hermitian(m));
}
BENCHMARK(BM_EigHermitian)->Arg(4)->Arg(16)->Arg(36);

void BM_ApplyExtended(benchmark::State& st) {
  const Index d = st.range(0);
  BipartiteState rho = random_state(d, 2);
  DecomposedMap dec = builtin::transposition(d);
  for (auto _ : st) benchmark::DoNotOptimize(apply_extended(dec, rho.matrix(), rho.dims(), Subsystem::B));
}
BENCHMARK(BM_ApplyExtended)->Arg(2)->Arg(4)->Arg(6);

void BM_CanonicalDecomposition(benchmark::State& st) {
  const Index d = st.range(0);
  HermitianMatrix c = builtin::transposition_choi(d);
  for (auto _ : st) benchmark::DoNotOptimize(canonical_decomposition(c));
}
BENCHMARK(BM_CanonicalDecomposition)->Arg(2)->Arg(4);

void BM_Theorem2(benchmark::State& st) {
  BipartiteState rho = random_state(4, 3);
  DecomposedMap dec = builtin::breuer_hall(4);
  const double alpha = static_cast<double>(st.range(0)) / 2;
  for (auto _ : st) {
    MapEvaluation ev(rho, dec);
    benchmark::DoNotOptimize(check_theorem2(ev, alpha, 1, Theorem2Variant::i));
  }
}
BENCHMARK(BM_Theorem2)->Arg(1)->Arg(2)->Arg(5);

void BM_Scan(benchmark::State& st) {
  ScanConfig cfg;
  cfg.family = FamilySpec::parse("rot_invariant:p=0");
  cfg.family.axes = {Axis::parse("q=0:1:20"), Axis::parse("r=0:1:20")};
  cfg.decomposition = "canonical";
  cfg.criteria = region_criteria(3);
  cfg.workers = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(run_scan(cfg));
}
BENCHMARK(BM_Scan)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
