// Copyright 2026 The toybit Authors
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "toybit/kernels.hpp"
#include "toybit/toy_ops.hpp"

using namespace toybit;

namespace {

const EpistemicState &sigma0() {
    static const auto s = make_epistemic(2, {0, 5, 10, 15});
    return s;
}

const MeasurementPartition &product_partition() {
    static const auto p = enumerate_partitions().front();
    return p;
}

const FiniteGroup<Permutation> &spekkens() {
    static const auto g = spekkens_group();
    return g;
}

template <auto Kernel>
void sample(benchmark::State &state) {
    const auto shots = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(sigma0(), product_partition(), shots, 1));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * shots));
}

template <auto Kernel>
void histogram(benchmark::State &state) {
    const auto &t = spekkens().table();
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(t));
}

template <auto Kernel>
void linear_search(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(n));
}

}  // namespace

BENCHMARK(sample<kernels::serial::sample_outcomes>)->Name("sample/serial")->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(sample<kernels::omp::sample_outcomes>)->Name("sample/omp")->Arg(1 << 14)->Arg(1 << 18)->UseRealTime();
BENCHMARK(histogram<kernels::serial::order_histogram>)->Name("order_histogram/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(histogram<kernels::omp::order_histogram>)->Name("order_histogram/omp")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(linear_search<kernels::serial::linear_validity_search>)->Name("linear_search/serial")->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(linear_search<kernels::omp::linear_validity_search>)->Name("linear_search/omp")->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
