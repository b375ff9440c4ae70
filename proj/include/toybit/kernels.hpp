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

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "toybit/cayley_table.hpp"
#include "toybit/measurement.hpp"
#include "toybit/scaled_matrix.hpp"

namespace toybit::kernels {

struct OutcomeCounts {
    std::vector<std::uint64_t> counts;  // per partition cell
    std::uint64_t repeat_mismatches = 0;  // immediate re-measurement gave another outcome
    bool operator==(const OutcomeCounts &) const = default;
};

// Both namespaces return identical results for identical inputs; shot s
// always uses derive_seed(seed, s) whatever the thread count.

namespace serial {
OutcomeCounts sample_outcomes(const EpistemicState &state, const MeasurementPartition &partition,
                              std::uint64_t shots, std::uint64_t seed);
std::map<int, std::size_t> order_histogram(const CayleyTable &table);
/// Orthogonal maps permuting the pure-state indicators, in search order.
std::vector<ScaledMatrix> linear_validity_search(int n_bits);
}  // namespace serial

namespace omp {
OutcomeCounts sample_outcomes(const EpistemicState &state, const MeasurementPartition &partition,
                              std::uint64_t shots, std::uint64_t seed);
std::map<int, std::size_t> order_histogram(const CayleyTable &table);
std::vector<ScaledMatrix> linear_validity_search(int n_bits);
}  // namespace omp

}  // namespace toybit::kernels
