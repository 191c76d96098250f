// Copyright 2026 The sharpcsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "sharpcsp/affine_count.h"
#include "sharpcsp/brute_force.h"
#include "sharpcsp/classifier.h"
#include "sharpcsp/gadget_library.h"
#include "sharpcsp/gf2.h"
#include "sharpcsp/graph.h"
#include "sharpcsp/reductions.h"
#include "sharpcsp/relation_props.h"

using namespace sharpcsp;

namespace {

Relation table(int k, std::uint64_t mask) {
  std::vector<BooleanTuple> ts;
  for (std::uint32_t t = 0; t < (1u << k); ++t)
    if (mask >> t & 1u) ts.emplace_back(k, t);
  return Relation::from_tuples(k, ts);
}

void BM_ClassifyAllTernary(benchmark::State& state) {
  std::vector<Relation> rels;
  for (std::uint64_t m = 0; m < 256; ++m) rels.push_back(table(3, m));
  for (auto _ : state) {
    int hits = 0;
    for (const auto& r : rels) hits += is_affine(r) + is_in_im2(r);
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_ClassifyAllTernary);

void BM_BruteForceCycle(benchmark::State& state) {
  const auto inst = encode_is_nand(cycle_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_count(inst));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BruteForceCycle)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

// chain of XOR constraints, counted by elimination
void BM_GaussianXorChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::string text = "vars";
  for (int i = 1; i <= n; ++i) text += " v" + std::to_string(i);
  text += "\n";
  for (int i = 1; i < n; ++i) text += "constraint XOR v" + std::to_string(i) + " v" + std::to_string(i + 1) + "\n";
  const auto inst = Instance::parse(text);
  for (auto _ : state) benchmark::DoNotOptimize(count_solutions(instance_to_system(inst)));
}
BENCHMARK(BM_GaussianXorChain)->RangeMultiplier(4)->Range(16, 1024);

void BM_NonAffineGadgets(benchmark::State& state) {
  std::vector<Relation> rels;
  for (std::uint64_t m = 0; m < 256; ++m) {
    auto r = table(3, m);
    if (!is_affine(r)) rels.push_back(std::move(r));
  }
  for (auto _ : state) {
    for (const auto& r : rels) benchmark::DoNotOptimize(from_non_affine("R", r, 0));
  }
}
BENCHMARK(BM_NonAffineGadgets)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
