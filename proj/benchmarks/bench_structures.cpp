#include <benchmark/benchmark.h>

#include "gact/boolring.hpp"
#include "gact/galois.hpp"
#include "gact/generic.hpp"
#include "gact/group.hpp"
#include "gact/independence.hpp"
#include "gact/structure.hpp"

using namespace gact;

namespace {

const char* const kGroups[] = {"z2", "z3", "z2xz2", "s3"};

void BM_Subgroups(benchmark::State& state) {
  const auto corpus = group_corpus(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& [name, g] : corpus) benchmark::DoNotOptimize(subgroups(*g));
  state.counters["groups"] = static_cast<double>(corpus.size());
}
BENCHMARK(BM_Subgroups)->Arg(8)->Arg(16)->Arg(24);

void BM_SaturateGraph(benchmark::State& state) {
  auto g = named_group(kGroups[state.range(0)]);
  SaturateOptions opts;
  opts.size_cap = 100'000;
  opts.keep_log = false;
  const int rounds = static_cast<int>(state.range(1));
  std::size_t size = 0;
  for (auto _ : state) {
    auto s = saturate_graph(initial_state(Signature::Graph, g), rounds, opts);
    size = static_cast<std::size_t>(s.current.size());
  }
  state.SetLabel(kGroups[state.range(0)]);
  state.counters["elements"] = static_cast<double>(size);
}
BENCHMARK(BM_SaturateGraph)->Args({0, 3})->Args({1, 3})->Args({2, 2})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_VerifyAxioms(benchmark::State& state) {
  auto g = named_group("z3");
  SaturateOptions opts;
  opts.size_cap = 100'000;
  opts.keep_log = false;
  const auto s = saturate_graph(initial_state(Signature::Graph, g), 3, opts);
  for (auto _ : state) benchmark::DoNotOptimize(verify_extension_axioms(s.current, Theory::Graph, 1, 1));
  state.counters["elements"] = static_cast<double>(s.current.size());
}
BENCHMARK(BM_VerifyAxioms)->Unit(benchmark::kMillisecond);

void BM_CheckAxioms(benchmark::State& state) {
  auto g = named_group(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(Theory::Graph, g, 100, 1));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_CheckAxioms)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_AutGroupPureSet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::string> labels;
  ElementSet whole;
  for (int i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    whole.push_back(i);
  }
  const FiniteExtension ext{GStructure::with_trivial_action(Signature::Empty, named_group("z1"), labels, {}), {}, whole};
  for (auto _ : state) benchmark::DoNotOptimize(aut_group(ext));
}
BENCHMARK(BM_AutGroupPureSet)->DenseRange(3, 7);

void BM_GaloisCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  ElementSet whole;
  for (int i = 0; i < n; ++i) {
    labels.push_back("v" + std::to_string(i));
    whole.push_back(i);
    if (i + 1 < n) edges.emplace_back(i, i + 1);
  }
  edges.emplace_back(n - 1, 0);
  const FiniteExtension ext{GStructure::with_trivial_action(Signature::Graph, named_group("z1"), labels, edges), {}, whole};
  for (auto _ : state) benchmark::DoNotOptimize(galois_connection_check(ext));
}
BENCHMARK(BM_GaloisCheck)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_DiamondAxiom(benchmark::State& state) {
  auto z2 = named_group("z2");
  const BooleanRing ring = BooleanRing::trivial_action(static_cast<int>(state.range(0)), z2);
  const TransformalIdeal i{2, 1, {parse_bool_polynomial("{1}*t[1,1]*t[2,1]", ring, 1)}};
  const TransformalIdeal j{2, 1, {parse_bool_polynomial("1", ring, 1)}};
  for (auto _ : state) benchmark::DoNotOptimize(check_diamond_axiom(ring, i, j));
}
BENCHMARK(BM_DiamondAxiom)->DenseRange(1, 4);

void BM_OrderRigidityScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(scan_periodic_order_automorphisms(static_cast<int>(state.range(0)), 12));
}
BENCHMARK(BM_OrderRigidityScan)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

}  // namespace
