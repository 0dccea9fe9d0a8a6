// Copyright 2026 The pgeom Authors
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

// Timings for the kernels that dominate the acceptance run.

#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "pgeom/codes.h"
#include "pgeom/graph.h"
#include "pgeom/graph_families.h"
#include "pgeom/polar.h"
#include "pgeom/regular.h"
#include "pgeom/schemes.h"

namespace pgeom {
namespace {

void BM_FieldMul(benchmark::State& state) {
  FieldPtr f = Field::OfOrder(static_cast<uint64_t>(state.range(0)));
  Elt acc = 1;
  for (auto _ : state) {
    for (Elt a = 1; a < f->q(); ++a) acc = f->mul(f->add(acc, a), a) | 1;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (f->q() - 1));
}
BENCHMARK(BM_FieldMul)->Arg(9)->Arg(64)->Arg(729)->Arg(4096);

void BM_PolarSpaceMake(benchmark::State& state) {
  for (auto _ : state) {
    PolarPtr ps = PolarSpace::Make(Family::kH, 3, static_cast<uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(ps->Generators().size());
  }
}
BENCHMARK(BM_PolarSpaceMake)->Arg(4)->Arg(9)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SrgCheckCollinearity(benchmark::State& state) {
  PolarPtr ps = PolarSpace::Make(Family::kQ, 6, static_cast<uint64_t>(state.range(0)));
  const Graph g = CollinearityGraph(*ps);
  for (auto _ : state) benchmark::DoNotOptimize(SrgCheck(g).srg);
  state.counters["vertices"] = static_cast<double>(g.n());
}
BENCHMARK(BM_SrgCheckCollinearity)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HemisystemSearch(benchmark::State& state) {
  PolarPtr ps = PolarSpace::Make(Family::kH, 3, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SearchPointRegularSystem(*ps, 2, 2'000'000).found);
  }
}
BENCHMARK(BM_HemisystemSearch)->Unit(benchmark::kMillisecond);

void BM_NuTripleCensus(benchmark::State& state) {
  const PointGraph nu = NuGraph(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(TripleCensus(nu.graph).size());
}
BENCHMARK(BM_NuTripleCensus)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_WeightEnumerator(benchmark::State& state) {
  PolarPtr ps = PolarSpace::Make(Family::kQMinus, 5, static_cast<uint64_t>(state.range(0)));
  const LinearCode code = CodeFromSet(ps->form().field, ps->points());
  for (auto _ : state) benchmark::DoNotOptimize(WeightEnumerator(code).min_distance);
}
BENCHMARK(BM_WeightEnumerator)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SchemeIdempotents(benchmark::State& state) {
  PolarPtr ps = PolarSpace::Make(Family::kW, 5, 3);
  for (auto _ : state) {
    const Scheme s = SchemeFromPolar(*ps);
    benchmark::DoNotOptimize(MinimalIdempotents(s).identities_ok);
  }
}
BENCHMARK(BM_SchemeIdempotents)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pgeom

BENCHMARK_MAIN();
