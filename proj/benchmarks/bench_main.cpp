#include <benchmark/benchmark.h>

#include "fuzzytop/complement.hpp"
#include "fuzzytop/oracle.hpp"
#include "fuzzytop/random.hpp"
#include "fuzzytop/sweeps.hpp"

using namespace fuzzytop;

namespace {

void BM_IntervalUnion(benchmark::State& state) {
  Gen gen(1);
  std::vector<Interval> raw_a, raw_b;
  for (long i = 0; i < state.range(0); ++i) {
    Rational lo = gen.unit(256), hi = gen.unit(256);
    if (hi < lo) std::swap(lo, hi);
    raw_a.push_back({lo, hi, gen.coin(), gen.coin()});
    lo = gen.unit(256), hi = gen.unit(256);
    if (hi < lo) std::swap(lo, hi);
    raw_b.push_back({lo, hi, gen.coin(), gen.coin()});
  }
  const IntervalSet a = IntervalSet::normalize(raw_a), b = IntervalSet::normalize(raw_b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.unite(b));
    benchmark::DoNotOptimize(a.intersect(b));
  }
}
BENCHMARK(BM_IntervalUnion)->Arg(4)->Arg(32)->Arg(256);

void BM_PsiStar(benchmark::State& state) {
  Gen gen(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  const GroundRef g = make_ground(names);
  const FuzzySet f = gen.fuzzy(g, 1024);
  for (auto _ : state) benchmark::DoNotOptimize(psi_star(f));
}
BENCHMARK(BM_PsiStar)->Arg(6)->Arg(64);

void BM_GenerateTopology(benchmark::State& state) {
  Gen gen(3);
  const GroundRef g = gen.ground(6);
  std::vector<FuzzySet> gens;
  for (long i = 0; i < state.range(0); ++i) gens.push_back(gen.fuzzy(g, 32));
  for (auto _ : state) benchmark::DoNotOptimize(fz_generate_topology(g, gens));
}
BENCHMARK(BM_GenerateTopology)->Arg(2)->Arg(4);

void BM_PsiLaws(benchmark::State& state) {
  Gen gen(4);
  const FuzzyTopology topo = gen.topology(gen.ground(6), 4, 32);
  for (auto _ : state) benchmark::DoNotOptimize(verify_psi_laws(topo, 3, 500));
  state.counters["opens"] = static_cast<double>(topo.size());
}
BENCHMARK(BM_PsiLaws);

void BM_ContinuityWitness(benchmark::State& state) {
  Gen gen(5);
  const FuzzyTopology topo = gen.topology(gen.ground(6), 4, 32);
  for (auto _ : state) {
    for (const auto& w : random_witnesses(topo, 16, 5)) benchmark::DoNotOptimize(verify_witness(w, topo));
  }
}
BENCHMARK(BM_ContinuityWitness);

void BM_NormalForm(benchmark::State& state) {
  Gen gen(6);
  const GroundRef g = gen.ground(5);
  const FiniteTopology base = iota_x(gen.topology(g, 3, 8));
  std::vector<PathExpr> parts{gen.path(base, 16, 3)};
  while (parts.size() < static_cast<std::size_t>(state.range(0))) {
    parts.push_back(gen.path_from(parts.back().finish(), base, 16, 3));
  }
  const PathExpr p = PathExpr::concat(parts);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(p));
}
BENCHMARK(BM_NormalForm)->Arg(2)->Arg(8);

void BM_ChiEval(benchmark::State& state) {
  Gen gen(7);
  const FiniteTopology base = FiniteTopology::generated_by(gen.ground(4), {});
  const PathExpr rho = gen.path(base, 16, 4);
  const PathNormalForm nf = normal_form(rho);
  const Rational s(1, 4), t(3, 4);
  for (auto _ : state) {
    for (long i = 0; i <= 64; ++i) benchmark::DoNotOptimize(chi_eval(nf, s, t, Rational(i, 64), Rational(1, 3)));
  }
}
BENCHMARK(BM_ChiEval);

void BM_IsComplement(benchmark::State& state) {
  Gen gen(8);
  const FuzzySet f = gen.fuzzy(gen.ground(6), 32);
  const FuzzySet g = fz_complement(f);
  for (auto _ : state) benchmark::DoNotOptimize(is_complement(f, g));
}
BENCHMARK(BM_IsComplement);

void BM_OracleRasterize(benchmark::State& state) {
  Gen gen(9);
  const FuzzySet f = gen.fuzzy(gen.ground(6), 32);
  const CylinderOpen c = psi_star(f);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_compare(c, brute_psi_star(f, state.range(0))));
}
BENCHMARK(BM_OracleRasterize)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
