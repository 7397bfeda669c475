#include <benchmark/benchmark.h>

#include "thinset/cardinal.hpp"
#include "thinset/constructions.hpp"
#include "thinset/partition.hpp"
#include "thinset/square_coloring.hpp"
#include "thinset/thinness.hpp"

using namespace thinset;

namespace {

void BM_BallEnumerationZ2(benchmark::State& state) {
  GroupPtr g = make_integer_lattice(2);
  Radius f = Radius::ordinal(g, static_cast<std::size_t>(state.range(0)));
  std::vector<Elem> window = g->prefix(256);
  for (auto _ : state) {
    std::size_t total = 0;
    for (const Elem& x : window) total += ball(x, f).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_BallEnumerationZ2)->Arg(4)->Arg(16)->Arg(64);

void BM_ThinWindowCheck(benchmark::State& state) {
  GroupPtr g = make_integer_lattice(1);
  WindowPtr w = Window::prefix(g, static_cast<std::size_t>(state.range(0)));
  WindowedSubset a = parse_subset_spec("pairs 10^n", w);
  Radius f = Radius::ordinal(g, 8);
  for (auto _ : state) {
    ThinnessReport r = is_m_thin_window(a, f, 2, 0);
    benchmark::DoNotOptimize(r.violated);
  }
}
BENCHMARK(BM_ThinWindowCheck)->Arg(1000)->Arg(10000);

void BM_GreedyPartition(benchmark::State& state) {
  GroupPtr g = make_integer_lattice(1);
  WindowPtr w = Window::prefix(g, 10001);
  std::vector<Elem> members;
  for (std::int64_t p = 100; p < 4000; p = p * 2 + 17)
    for (int j = 0; j < 3; ++j) members.push_back(g->parse(std::to_string(p + j)));
  WindowedSubset a = WindowedSubset::of_elements(w, members, "clusters");
  std::vector<Radius> schedule = default_radius_schedule(g, 32);
  for (auto _ : state) {
    PartitionResult r = greedy_thin_partition(a, 3, schedule);
    benchmark::DoNotOptimize(r.parts.size());
  }
}
BENCHMARK(BM_GreedyPartition);

void BM_ChainColoring(benchmark::State& state) {
  GroupPtr g = make_direct_sum(2, std::nullopt);
  std::size_t levels = static_cast<std::size_t>(state.range(0));
  SubgroupChain chain = SubgroupChain::enumeration_power_chain(g, 2, levels);
  for (auto _ : state) {
    ColoringTable t = chain_three_coloring(g, chain, std::size_t{1} << levels);
    benchmark::DoNotOptimize(t.size());
  }
}
BENCHMARK(BM_ChainColoring)->Arg(4)->Arg(5);

void BM_VandermondeSolve(benchmark::State& state) {
  std::vector<Rational> x2{Rational(3, 7), Rational(-2, 5), Rational(9), Rational(1, 3)};
  std::vector<Rational> y2{Rational(4, 9), Rational(11, 2), Rational(-6), Rational(0)};
  for (auto _ : state) {
    VandermondeSolution sol = vandermonde_solve(0, 1, 2, x2, y2);
    benchmark::DoNotOptimize(sol.a[0].num());
  }
}
BENCHMARK(BM_VandermondeSolve);

void BM_MuFormula(benchmark::State& state) {
  Aleph size = Aleph::parse("aleph (omega1+omega)");
  for (auto _ : state) {
    MuResult r = mu_thin_partition_number(size, size);
    benchmark::DoNotOptimize(r.branch);
  }
}
BENCHMARK(BM_MuFormula);

}  // namespace

BENCHMARK_MAIN();
