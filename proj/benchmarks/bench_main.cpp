// Copyright 2026 The emgraded Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "emgraded/content.hpp"
#include "emgraded/deciders.hpp"
#include "emgraded/presets.hpp"

namespace {

using namespace emg;

const GradedRing& preset(const std::string& name) {
  static std::map<std::string, GradedRing> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_preset(find_preset(name))).first;
  return it->second;
}

void BM_ContentSearchE1(benchmark::State& state) {
  const auto& e1 = preset("e1");
  const Polynomial f = parse_polynomial(e1.ring, "2+2*x+2Y*x^2");
  for (auto _ : state) {
    ContentSearcher searcher(e1.ring);
    benchmark::DoNotOptimize(find_annihilating_content(e1.ring, f, nullptr, &searcher));
  }
}
BENCHMARK(BM_ContentSearchE1);

void BM_ContentSearchWarm(benchmark::State& state) {
  const auto& r = preset("e2-trunc-d1");
  ContentSearcher searcher(r.ring);
  const Polynomial f = parse_polynomial(r.ring, "[2,4,2]");
  for (auto _ : state)
    benchmark::DoNotOptimize(find_annihilating_content(r.ring, f, nullptr, &searcher));
}
BENCHMARK(BM_ContentSearchWarm);

void BM_EmGradedE2d1(benchmark::State& state) {
  const auto& r = preset("e2-trunc-d1");
  SearchBounds bounds;
  bounds.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(is_em_g_graded(*r.grading, bounds));
}
BENCHMARK(BM_EmGradedE2d1)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ValidateRing(benchmark::State& state) {
  const auto& r = preset(state.range(0) == 0 ? "e1-idealization" : "z4-groupring-z2");
  for (auto _ : state) benchmark::DoNotOptimize(FiniteRing::validate(r.ring.tables()));
}
BENCHMARK(BM_ValidateRing)->Arg(0)->Arg(1);

void BM_EmRingE1(benchmark::State& state) {
  const auto& e1 = preset("e1");
  for (auto _ : state) benchmark::DoNotOptimize(is_em_ring(e1.ring, {}));
}
BENCHMARK(BM_EmRingE1);

}  // namespace

BENCHMARK_MAIN();
