#include <random>

#include <benchmark/benchmark.h>

#include "qsing/group.hpp"
#include "qsing/linalg.hpp"
#include "qsing/resolver.hpp"
#include "qsing/toric.hpp"

namespace {

using namespace qsing;

void BM_ClosureCyclic(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const DiagonalSpec s = DiagonalSpec::make(d, {1, 2, -3});
  for (auto _ : state) {
    auto g = MatrixGroup::closure(std::vector<FieldMatrix>{s.matrix()});
    benchmark::DoNotOptimize(g.class_count());
  }
}
BENCHMARK(BM_ClosureCyclic)->Arg(7)->Arg(25)->Arg(60);

void BM_ClosureMonomial(benchmark::State& state) {
  const DiagonalSpec s = DiagonalSpec::make(7, {1, 2, 4});
  const std::vector<FieldMatrix> gens = {s.matrix(), matrix_T()};
  for (auto _ : state) {
    auto g = MatrixGroup::closure(gens);
    benchmark::DoNotOptimize(g.class_count());
  }
}
BENCHMARK(BM_ClosureMonomial);

void BM_Terminalize3(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const QuotientCone c = quotient_lattice(DiagonalSpec::make(d, {1, 2, -3}));
  for (auto _ : state) {
    auto t = terminalize(c);
    benchmark::DoNotOptimize(t.output.cones.size());
  }
}
BENCHMARK(BM_Terminalize3)->Arg(7)->Arg(25)->Arg(101);

void BM_Terminalize4(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const QuotientCone c = quotient_lattice(DiagonalSpec::make(d, {1, 2, 3, -6}));
  for (auto _ : state) {
    auto t = terminalize(c);
    benchmark::DoNotOptimize(t.output.cones.size());
  }
}
BENCHMARK(BM_Terminalize4)->Arg(7)->Arg(16)->Arg(31);

IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Integer(static_cast<long long>(rng() % 41) - 20);
  return m;
}

void BM_Hermite(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    auto h = hermite_normal_form(m);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_Hermite)->Arg(4)->Arg(8)->Arg(16);

void BM_Smith(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) {
    auto s = smith_normal_form(m);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Smith)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
