#include <benchmark/benchmark.h>

#include <random>

#include "hosts.hpp"
#include "kcat/cat/category.hpp"
#include "kcat/complex/cochain.hpp"
#include "kcat/exact/waldhausen.hpp"
#include "kcat/gft/gft.hpp"
#include "kcat/kth/k0.hpp"
#include "kcat/kth/simplicial_set.hpp"
#include "kcat/kth/smith.hpp"
#include "oracles.hpp"

using namespace kcat;

static void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = oracle::random_matrix(rng, n, n, -3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kth::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(2)->Arg(4)->Arg(6);

static void BM_SmithCoboundary(benchmark::State& state) {
  auto k = complex::minimal_torus();
  for (int i = 0; i < state.range(0); ++i) k = complex::barycentric_refine(k);
  const auto c = complex::cochain_from_simplicial(k, Ring::integers());
  for (auto _ : state) benchmark::DoNotOptimize(kth::smith_normal_form(c.differentials[1]));
}
BENCHMARK(BM_SmithCoboundary)->Arg(0)->Arg(1);

static void BM_NerveChain(benchmark::State& state) {
  const auto c = cat::chain_category(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kth::nerve(c, 3));
}
BENCHMARK(BM_NerveChain)->Arg(2)->Arg(4)->Arg(8);

static void BM_CohomologyRefined(benchmark::State& state) {
  auto k = complex::minimal_torus();
  for (int i = 0; i < state.range(0); ++i) k = complex::barycentric_refine(k);
  const auto c = complex::cochain_from_simplicial(k, Ring::integers());
  for (auto _ : state) benchmark::DoNotOptimize(complex::cohomology(c));
}
BENCHMARK(BM_CohomologyRefined)->Arg(0)->Arg(1);

static void BM_K0(benchmark::State& state) {
  const auto e = exact::full_exact_structure(hosts::vector_spaces(2, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(kth::k0(e).normal_form());
}
BENCHMARK(BM_K0)->Arg(1)->Arg(2);

static void BM_GFTRoundTrip(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto grid = gft::ChunkGrid::uniform({2, 2, 2, 2});
  std::vector<double> field(grid.site_count(), 1.5);
  const auto g = gft::GroupSpec::cyclic(n);
  for (auto _ : state) benchmark::DoNotOptimize(gft::gft_reconstruct(gft::gft_decompose(grid, field, g), grid));
}
BENCHMARK(BM_GFTRoundTrip)->Arg(2)->Arg(4);
BENCHMARK_MAIN();
