#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "gscomm/dense_coding.hpp"
#include "gscomm/gf2.hpp"
#include "gscomm/graph.hpp"
#include "gscomm/oracle.hpp"
#include "gscomm/teleportation.hpp"

using namespace gscomm;

namespace {

BitMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, static_cast<int>(rng() & 1));
  }
  return m;
}

BitMatrix random_invertible(std::size_t n, std::uint64_t seed) {
  for (std::uint64_t tweak = 0;; ++tweak) {
    BitMatrix m = random_matrix(n, seed + tweak);
    if (rank(m) == n) return m;
  }
}

PartitionedGraph random_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> senders;
  for (int i = 1; i <= n; ++i) senders.push_back(i);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= 2 * n; ++u) {
    for (int v = u + 1; v <= 2 * n; ++v) {
      if (rng() & 1) edges.emplace_back(u, v);
    }
  }
  return PartitionedGraph::from_parts(n, senders, edges);
}

PartitionedGraph viable_graph(int n, std::uint64_t seed) {
  for (std::uint64_t tweak = 0;; ++tweak) {
    PartitionedGraph g = random_graph(n, seed + tweak);
    if (is_viable(g)) return g;
  }
}

void BM_rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BitMatrix m = random_matrix(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank)->Arg(6)->Arg(12)->Arg(32)->Arg(64);

void BM_invert(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BitMatrix m = random_invertible(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(invert(m));
}
BENCHMARK(BM_invert)->Arg(6)->Arg(12)->Arg(32)->Arg(64);

void BM_build_graph_state(benchmark::State& state) {
  const PartitionedGraph g = random_graph(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_graph_state(g));
}
BENCHMARK(BM_build_graph_state)->Arg(4)->Arg(5)->Arg(6);

void BM_local_complement(benchmark::State& state) {
  const PartitionedGraph g = random_graph(6, 4);
  int v = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(local_complement(g, v));
    v = (v + 1) % g.num_vertices();
  }
}
BENCHMARK(BM_local_complement);

void BM_dense_roundtrip_exhaustive(benchmark::State& state) {
  const PartitionedGraph g = viable_graph(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip_exhaustive(g));
}
BENCHMARK(BM_dense_roundtrip_exhaustive)->Arg(3)->Arg(4)->Arg(6);

void BM_teleport_single_outcome(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PartitionedGraph g = viable_graph(n, 6);
  const StateVector input = random_state(n, 7);
  const Outcome o{BitVector::from_unsigned(1, 2 * static_cast<std::size_t>(n))};
  for (auto _ : state) benchmark::DoNotOptimize(teleport_oracle(g, input, o));
}
BENCHMARK(BM_teleport_single_outcome)->Arg(2)->Arg(3)->Arg(4);

void BM_teleport_all_outcomes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PartitionedGraph g = viable_graph(n, 8);
  const StateVector input = random_state(n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(run_all_outcomes(g, input));
}
BENCHMARK(BM_teleport_all_outcomes)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
