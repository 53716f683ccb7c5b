#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "quantcat/corpus.hpp"
#include "quantcat/hausdorff.hpp"
#include "quantcat/monad.hpp"

using namespace quantcat;

namespace {

std::vector<Rational> line_points(std::size_t n) {
  std::vector<Rational> pts;
  for (std::size_t i = 0; i < n; ++i) pts.emplace_back(static_cast<long long>(i * i % 97), 1 + static_cast<long long>(i % 5));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void BM_MinPlusCompose(benchmark::State& state) {
  const CategoryPtr x = line_category(line_points(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(compose(x->hom(), x->hom()));
  state.SetComplexityN(static_cast<std::int64_t>(x->size()));
}
BENCHMARK(BM_MinPlusCompose)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_HausdorffDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CategoryPtr x = line_category(line_points(n));
  std::vector<std::size_t> a, b;
  for (std::size_t i = 0; i < x->size(); ++i) (i % 3 == 0 ? a : b).push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff_distance(*x, a, b));
}
BENCHMARK(BM_HausdorffDistance)->RangeMultiplier(2)->Range(8, 64);

void BM_HausdorffViaPresheaves(benchmark::State& state) {
  const CategoryPtr x = line_category(line_points(static_cast<std::size_t>(state.range(0))));
  std::vector<std::size_t> a, b;
  for (std::size_t i = 0; i < x->size(); ++i) (i % 3 == 0 ? a : b).push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff_distance_via_presheaves(*x, a, b));
}
BENCHMARK(BM_HausdorffViaPresheaves)->RangeMultiplier(2)->Range(8, 64);

void BM_PresheafEnumeration(benchmark::State& state) {
  const auto cats = all_categories(builtin_quantaloid("chain3"), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& c : cats) benchmark::DoNotOptimize(enumerate_presheaves(*c, 0));
  }
  state.counters["categories"] = static_cast<double>(cats.size());
}
BENCHMARK(BM_PresheafEnumeration)->DenseRange(1, 2);

void BM_PresheafMonadLaws(benchmark::State& state) {
  const Corpus corpus = category_corpus(builtin_quantaloid("2"), static_cast<std::size_t>(state.range(0)));
  const EnrichedMonadPtr p = monad_by_name("P");
  for (auto _ : state) benchmark::DoNotOptimize(check_enriched_monad(*p, corpus));
}
BENCHMARK(BM_PresheafMonadLaws)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
