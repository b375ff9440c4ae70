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

#include "toybit/group_algorithms.hpp"
#include "toybit/kernels.hpp"
#include "toybit/rng.hpp"

#include "linear_search.hpp"

namespace toybit::kernels::serial {

OutcomeCounts sample_outcomes(const EpistemicState &state, const MeasurementPartition &partition,
                              std::uint64_t shots, std::uint64_t seed) {
    OutcomeCounts out;
    out.counts.assign(partition.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const auto first = measure(partition, prepare_sample(state, SplitMix64::derive_seed(seed, s)));
        const auto again = measure(partition, first.sample);
        ++out.counts[first.outcome];
        if (again.outcome != first.outcome) ++out.repeat_mismatches;
    }
    return out;
}

std::map<int, std::size_t> order_histogram(const CayleyTable &table) { return element_order_histogram(table); }

std::vector<ScaledMatrix> linear_validity_search(int n_bits) {
    const detail::LinearSearch search(n_bits);
    std::vector<ScaledMatrix> out;
    for (int q = 0; q < search.num_states(); ++q) {
        auto part = search.branch(q);
        for (auto &m : part) out.push_back(std::move(m));
    }
    return out;
}

}  // namespace toybit::kernels::serial
