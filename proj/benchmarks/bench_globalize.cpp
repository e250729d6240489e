#include <benchmark/benchmark.h>

#include "isgd/catalog.hpp"
#include "isgd/globalize.hpp"
#include "isgd/io.hpp"

using namespace isgd;

namespace {

// Regular action of Z_n restricted to its first half; every point stays covered.
ActionPtr half_cyclic(std::size_t n) {
  auto y = regular_action(cyclic_group(n));
  std::vector<ElementId> keep;
  for (std::size_t i = 0; i < n / 2 + 1; ++i) keep.push_back(ElementId{i});
  return std::make_shared<const PartialAction>(restrict(*y, Subset(n, keep)));
}

void BM_Globalize(benchmark::State& state) {
  auto x = half_cyclic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_globalization(x));
  state.counters["seeds"] = static_cast<double>(build_seed_set(*x).size());
}
BENCHMARK(BM_Globalize)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_CloseEquivalence(benchmark::State& state) {
  auto x = half_cyclic(static_cast<std::size_t>(state.range(0)));
  const auto seeds = build_seed_set(*x);
  for (auto _ : state) benchmark::DoNotOptimize(close_equivalence(seeds, *x));
}
BENCHMARK(BM_CloseEquivalence)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_ValidateP(benchmark::State& state) {
  auto x = half_cyclic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_p_axioms(*x));
}
BENCHMARK(BM_ValidateP)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_Mediating(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  auto y = regular_action(cyclic_group(n));
  auto x = half_cyclic(n);
  auto glob = build_globalization(x);
  auto triple = GlobalizationTriple::make(inclusion(x, y));
  for (auto _ : state) benchmark::DoNotOptimize(mediating(glob, triple));
}
BENCHMARK(BM_Mediating)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);

void BM_ParsePrintRoundTrip(benchmark::State& state) {
  auto x = reference_partial_action();
  const std::string text = print_action(*x, "reference.isgd");
  for (auto _ : state) benchmark::DoNotOptimize(parse_action(text, x->structure_ptr()));
}
BENCHMARK(BM_ParsePrintRoundTrip);

}  // namespace

BENCHMARK_MAIN();
