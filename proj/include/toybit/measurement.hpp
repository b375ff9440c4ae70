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
#include <vector>

#include "toybit/epistemic.hpp"

namespace toybit {

/// Reproducible measurement: disjoint valid states covering every ontic cell.
class MeasurementPartition {
   public:
    /// Throws Error(InvalidPartition) on overlap, gaps or mixed system sizes.
    explicit MeasurementPartition(std::vector<EpistemicState> cells);

    int n_bits() const noexcept { return cells_.front().n_bits(); }
    const std::vector<EpistemicState> &cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }

    /// Index of the cell containing the given ontic cell.
    std::size_t outcome_of(int ontic) const noexcept { return owner_[ontic]; }

    bool operator==(const MeasurementPartition &other) const { return cells_ == other.cells_; }

   private:
    std::vector<EpistemicState> cells_;
    std::vector<std::uint8_t> owner_;
};

/// All partitions of the two-bit space into four pure states, cells sorted by
/// mask inside each partition and partitions sorted lexicographically.
std::vector<MeasurementPartition> enumerate_partitions();

/// The hidden variable together with the observer's state and the RNG stream
/// that drives it. Invariant: epistemic.contains(ontic).
struct OnticSample {
    int ontic;
    EpistemicState epistemic;
    std::uint64_t rng_seed;
};

/// Draws the hidden variable uniformly from the state's support.
OnticSample prepare_sample(const EpistemicState &state, std::uint64_t seed);

struct MeasureResult {
    std::size_t outcome;
    OnticSample sample;
};

/// The outcome is the cell holding the hidden variable. The observer's state
/// collapses to that cell and the hidden variable is redrawn uniformly inside
/// it (measurement disturbance).
MeasureResult measure(const MeasurementPartition &partition, const OnticSample &sample);

}  // namespace toybit
