#include "xicrystal/crystal.hpp"
#include "xicrystal/enumerate.hpp"
#include "xicrystal/monomial.hpp"
#include "xicrystal/regularity.hpp"

#include <benchmark/benchmark.h>

using namespace xicrystal;

namespace {

void BM_GenerateLevelOne(benchmark::State& state) {
  SlopeDatum datum = SlopeDatum::generic(SlopeBase{1, 1, {1}});
  int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate(datum, 3, {0}, depth));
  }
}
BENCHMARK(BM_GenerateLevelOne)->Arg(8)->Arg(10)->Arg(12);

void BM_GenerateLevelTwo(benchmark::State& state) {
  SlopeDatum datum = SlopeDatum::row(SlopeBase{1, 1, {1, 1}});
  int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate(datum, 3, {0, 1}, depth));
  }
}
BENCHMARK(BM_GenerateLevelTwo)->Arg(8)->Arg(10);

void BM_RegularitySweep(benchmark::State& state) {
  SlopeDatum datum = SlopeDatum::generic(SlopeBase{2, 1, {1, Rational(3, 2)}});
  auto universe = multipartitions_up_to(3, {0, 1}, 8);
  for (auto _ : state) {
    long regular = 0;
    for (const auto& mp : universe) {
      if (is_regular(datum, mp)) ++regular;
    }
    benchmark::DoNotOptimize(regular);
  }
}
BENCHMARK(BM_RegularitySweep);

void BM_TangentCharacter(benchmark::State& state) {
  SlopeDatum datum = SlopeDatum::generic(SlopeBase{1, 1, {1, 1}});
  MultiPartition mp(3, {0, 1},
                    {Partition{{4, 3, 1}}, Partition{{3, 2, 2, 1}}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(attracting_dimension(datum, mp));
  }
}
BENCHMARK(BM_TangentCharacter);

void BM_MonomialOperators(benchmark::State& state) {
  EdgeConstants constants = make_edge_constants(3, {1, 1, 1}, {1, 1, 1});
  Monomial m = Monomial::variable(0, 3) * Monomial::variable(1, 5, -2) *
               Monomial::variable(2, 1) * Monomial::variable(0, -4, 3) *
               Monomial::variable(1, 2);
  for (auto _ : state) {
    for (int residue = 0; residue < 3; ++residue) {
      benchmark::DoNotOptimize(lower_direct(constants, m, residue));
      benchmark::DoNotOptimize(raise_bracket(constants, m, residue));
    }
  }
}
BENCHMARK(BM_MonomialOperators);

}  // namespace

BENCHMARK_MAIN();
