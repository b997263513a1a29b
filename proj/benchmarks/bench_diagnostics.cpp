#include <benchmark/benchmark.h>

#include "lpcompact/audit.hpp"
#include "lpcompact/covering.hpp"
#include "lpcompact/rademacher.hpp"

using namespace lpcompact;

namespace {

void BM_SmallSetModulus(benchmark::State& state) {
  const auto family = rademacher_l1_family(4, static_cast<unsigned>(state.range(0)));
  const auto g = family.member(3).norm_function(Exponent(2));
  const Rational delta(1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(small_set_modulus(g, delta));
}

void BM_CoveringExact(benchmark::State& state) {
  std::vector<SparseSeqVector> pts;
  for (long n = 1; n <= state.range(0); ++n) {
    pts.push_back(canonical_basis(static_cast<unsigned>(n)));
    pts.push_back(-canonical_basis(static_cast<unsigned>(n)));
  }
  const Rational eps(9, 10);
  for (auto _ : state) benchmark::DoNotOptimize(covering_number(pts, eps));
}

void BM_FrechetSearch(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto family = rademacher_l1_family(n, n);
  const Rational eps(1, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(frechet_search(family, eps, std::size_t{1} << (n / 2)));
}

void BM_FamilyAudit(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto family = rademacher_l1_family(2, n);
  std::vector<Partition> chain;
  for (unsigned l = 0; l <= n; ++l)
    chain.push_back(Partition::consecutive(family.space(), std::size_t{1} << l));
  const std::vector<Rational> grid{Rational(1, 16), Rational(1, 8), Rational(1, 4)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        family_theorem_audit(family, Exponent(1), Rational(1, 4), grid, chain));
  }
}

void BM_ExampleReport(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(example_report(n, n, 3, Rational(9, 10)));
}

}  // namespace

BENCHMARK(BM_SmallSetModulus)->Arg(6)->Arg(10);
BENCHMARK(BM_CoveringExact)->Arg(4)->Arg(7);
BENCHMARK(BM_FrechetSearch)->Arg(4)->Arg(6);
BENCHMARK(BM_FamilyAudit)->Arg(4)->Arg(6);
BENCHMARK(BM_ExampleReport)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
