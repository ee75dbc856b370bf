#include <benchmark/benchmark.h>

#include <random>

#include "canonwit/bounds.hpp"
#include "canonwit/canonical.hpp"
#include "canonwit/extraction.hpp"
#include "canonwit/oracles.hpp"

using namespace canonwit;

namespace {

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

void BM_InducedEmbeddingC5(benchmark::State& state) {
  Graph host = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 1);
  Graph c5 = cycle_graph(5);
  for (auto _ : state) benchmark::DoNotOptimize(find_induced_embedding(host, c5));
}
BENCHMARK(BM_InducedEmbeddingC5)->Arg(10)->Arg(20)->Arg(40);

void BM_LongestPath(benchmark::State& state) {
  Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(longest_path(g));
}
BENCHMARK(BM_LongestPath)->Arg(10)->Arg(14)->Arg(18);

void BM_FindCanonical(benchmark::State& state) {
  Graph g = grid_graph(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_canonical(g, 4));
}
BENCHMARK(BM_FindCanonical)->Arg(3)->Arg(5)->Arg(7);

void BM_AntichainCheck(benchmark::State& state) {
  SearchLimits limits;
  limits.pattern_vertices = 16;
  auto all = enumerate_canonical(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_antichain(all, limits));
}
BENCHMARK(BM_AntichainCheck)->Arg(6)->Arg(10);

void BM_PipelineRakeTree(benchmark::State& state) {
  Graph g = rake_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(witness_pipeline(g, 4, 2));
}
BENCHMARK(BM_PipelineRakeTree)->Arg(8)->Arg(14)->Arg(30);

void BM_PipelineGrid(benchmark::State& state) {
  Graph g = grid_graph(6, 6);
  Embedding model;
  model.mode = EmbeddingMode::kMinor;
  for (Vertex v = 0; v < g.order(); ++v) model.branch_sets.push_back({v});
  PipelineOptions opts;
  opts.stage = PipelineStage::kDenseRake;
  opts.grid_model.emplace(model, 6);
  for (auto _ : state) benchmark::DoNotOptimize(witness_pipeline(g, 6, 3, opts));
}
BENCHMARK(BM_PipelineGrid);

void BM_PipelineRandom(benchmark::State& state) {
  std::vector<Graph> graphs;
  for (std::uint64_t seed = 0; seed < 32; ++seed) graphs.push_back(random_graph(16, 0.3, seed));
  for (auto _ : state)
    for (const auto& g : graphs) benchmark::DoNotOptimize(witness_pipeline(g, 4, 2));
}
BENCHMARK(BM_PipelineRandom);

void BM_InducedPathOrBiclique(benchmark::State& state) {
  Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.4, 3);
  VertexSequence p;
  for (Vertex v = 0; v < g.order(); ++v) p.push_back(v);
  std::vector<Edge> edges = g.edges();
  for (Vertex v = 0; v + 1 < g.order(); ++v) edges.emplace_back(v, v + 1);
  Graph h = Graph::from_edge_list(g.order(), edges);
  for (auto _ : state) benchmark::DoNotOptimize(induced_path_or_biclique(h, p, 4, 4));
}
BENCHMARK(BM_InducedPathOrBiclique)->Arg(8)->Arg(16)->Arg(32);

void BM_BoundY(benchmark::State& state) {
  for (auto _ : state) {
    BoundCalculator calc;
    benchmark::DoNotOptimize(calc.thm_main2_Y(calc.number(4), calc.number(3)));
  }
}
BENCHMARK(BM_BoundY);

}  // namespace
BENCHMARK_MAIN();
