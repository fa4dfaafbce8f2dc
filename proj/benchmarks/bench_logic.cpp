#include <benchmark/benchmark.h>

#include <string>

#include "gact/config.hpp"
#include "gact/formula.hpp"
#include "gact/generic_eval.hpp"
#include "gact/qe.hpp"

using namespace gact;

namespace {

const char* const kGroups[] = {"z2", "z3", "z2xz2", "s3"};

void BM_EnumerateConfigurations(benchmark::State& state) {
  auto g = named_group(kGroups[state.range(0)]);
  const TermSet ts(g, 1, static_cast<int>(state.range(1)));
  std::size_t count = 0;
  for (auto _ : state) count = enumerate_extensions(std::vector<Literal>{}, ts).size();
  state.SetLabel(kGroups[state.range(0)]);
  state.counters["configurations"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateConfigurations)->Args({0, 1})->Args({1, 1})->Args({2, 1})->Args({3, 1})->Args({0, 2});

// Nested alternation over two fresh witnesses, moved by the group's first non-identity element.
std::string nested_formula(const FiniteGroup& g) {
  const std::string s = g.name(1);
  return "A y. E z. (R(x,y) -> (R(y,z) & !R(x,z) & " + s + "·z != z)) | y = " + s + "·x";
}

void BM_QuantifierElimination(benchmark::State& state) {
  auto g = named_group(kGroups[state.range(0)]);
  const Formula f = parse(nested_formula(*g), *g);
  for (auto _ : state) benchmark::DoNotOptimize(qe_graph(f, g));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_QuantifierElimination)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_GenericEvaluation(benchmark::State& state) {
  auto g = named_group(kGroups[state.range(0)]);
  const Formula f = parse(nested_formula(*g), *g);
  const auto configs = enumerate_extensions(std::vector<Literal>{}, TermSet(g, 1, 0));
  for (auto _ : state) {
    GenericEvaluator ev(Theory::Graph, g);
    for (const auto& q : configs) benchmark::DoNotOptimize(ev.eval(q, {"x"}, f));
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_GenericEvaluation)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ParsePrint(benchmark::State& state) {
  auto g = named_group("s3");
  std::string text = "x = x";
  for (int i = 0; i < state.range(0); ++i) text = "E y" + std::to_string(i) + ". R(r·y" + std::to_string(i) + ", x) & (" + text + ")";
  for (auto _ : state) benchmark::DoNotOptimize(to_string(parse(text, *g), *g));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParsePrint)->Range(4, 64);

}  // namespace
