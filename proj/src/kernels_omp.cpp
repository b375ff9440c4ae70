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

#include <omp.h>

#include "toybit/kernels.hpp"
#include "toybit/rng.hpp"

#include "linear_search.hpp"

namespace toybit::kernels::omp {

OutcomeCounts sample_outcomes(const EpistemicState &state, const MeasurementPartition &partition,
                              std::uint64_t shots, std::uint64_t seed) {
    const std::size_t cells = partition.size();
    std::vector<std::uint64_t> counts(cells, 0);
    std::uint64_t mismatches = 0;
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(cells, 0);
        std::uint64_t local_mismatches = 0;
#pragma omp for schedule(static) nowait
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(shots); ++s) {
            const auto first =
                measure(partition, prepare_sample(state, SplitMix64::derive_seed(seed, static_cast<std::uint64_t>(s))));
            const auto again = measure(partition, first.sample);
            ++local[first.outcome];
            if (again.outcome != first.outcome) ++local_mismatches;
        }
#pragma omp critical
        {
            for (std::size_t c = 0; c < cells; ++c) counts[c] += local[c];
            mismatches += local_mismatches;
        }
    }
    return {std::move(counts), mismatches};
}

std::map<int, std::size_t> order_histogram(const CayleyTable &table) {
    const auto n = static_cast<std::int64_t>(table.order());
    std::vector<int> orders(table.order());
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < n; ++i) orders[static_cast<std::size_t>(i)] = table.element_order(static_cast<CayleyTable::Index>(i));
    std::map<int, std::size_t> out;
    for (int o : orders) ++out[o];
    return out;
}

std::vector<ScaledMatrix> linear_validity_search(int n_bits) {
    const detail::LinearSearch search(n_bits);
    std::vector<std::vector<ScaledMatrix>> branches(static_cast<std::size_t>(search.num_states()));
#pragma omp parallel for schedule(dynamic, 1)
    for (int q = 0; q < search.num_states(); ++q) branches[static_cast<std::size_t>(q)] = search.branch(q);
    // Concatenating in branch order reproduces the serial order exactly.
    std::vector<ScaledMatrix> out;
    for (auto &b : branches)
        for (auto &m : b) out.push_back(std::move(m));
    return out;
}

}  // namespace toybit::kernels::omp
