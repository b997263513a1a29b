#include <benchmark/benchmark.h>

#include <random>

#include "lpcompact/operators.hpp"
#include "lpcompact/rademacher.hpp"

using namespace lpcompact;

namespace {

StepFunction<SparseSeqVector> sample_function(const SpacePtr& space, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Partition pi = Partition::consecutive(space, space->atom_count() / 4);
  std::vector<SparseSeqVector> vals;
  vals.reserve(pi.block_count());
  for (std::size_t b = 0; b < pi.block_count(); ++b) {
    std::map<unsigned, Rational> entries;
    for (unsigned k = 0; k < 3; ++k)
      entries[static_cast<unsigned>(1 + rng() % 8)] =
          Rational(static_cast<long long>(rng() % 9) - 4, 1 + static_cast<long long>(rng() % 4));
    vals.emplace_back(NormKind::sum, std::move(entries));
  }
  return {std::move(pi), std::move(vals)};
}

void BM_CondExpect(benchmark::State& state) {
  const auto space = MeasureSpace::dyadic(static_cast<unsigned>(state.range(0)));
  const auto f = sample_function(space, 42);
  const auto pi = Partition::consecutive(space, 4);
  for (auto _ : state) benchmark::DoNotOptimize(cond_expect(f, pi));
}

void BM_LpNormPower(benchmark::State& state) {
  const auto space = MeasureSpace::dyadic(static_cast<unsigned>(state.range(0)));
  const auto f = sample_function(space, 42);
  const Exponent p{2};
  for (auto _ : state) benchmark::DoNotOptimize(f.lp_norm_power(p));
}

void BM_EssOsc(benchmark::State& state) {
  const auto space = MeasureSpace::dyadic(static_cast<unsigned>(state.range(0)));
  const auto f = sample_function(space, 42);
  const auto full = MeasurableSet::full(space);
  for (auto _ : state) benchmark::DoNotOptimize(ess_osc(f, full));
}

void BM_RademacherFamily(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rademacher_l1_family(n, n));
}

}  // namespace

BENCHMARK(BM_CondExpect)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(BM_LpNormPower)->Arg(6)->Arg(8)->Arg(10);
BENCHMARK(BM_EssOsc)->Arg(6)->Arg(8);
BENCHMARK(BM_RademacherFamily)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
