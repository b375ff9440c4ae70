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

#include "toybit/measurement.hpp"

#include <algorithm>
#include <bit>

#include "toybit/rng.hpp"

namespace toybit {

MeasurementPartition::MeasurementPartition(std::vector<EpistemicState> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw Error(ErrorKind::InvalidPartition, "partition has no cells");
    const int n = cells_.front().n_bits();
    const int total = num_cells(n);
    owner_.assign(static_cast<std::size_t>(total), 0xFF);
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        if (cells_[k].n_bits() != n) throw Error(ErrorKind::InvalidPartition, "cells describe different systems");
        for (int c : cells_[k].cells()) {
            if (owner_[static_cast<std::size_t>(c)] != 0xFF) {
                throw Error(ErrorKind::InvalidPartition, "cells overlap at ontic cell " + std::to_string(c));
            }
            owner_[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(k);
        }
    }
    if (std::find(owner_.begin(), owner_.end(), 0xFF) != owner_.end()) {
        throw Error(ErrorKind::InvalidPartition, "cells do not cover every ontic cell");
    }
}

namespace {

void extend_partitions(const std::vector<EpistemicState> &states, CellMask covered,
                       std::vector<EpistemicState> &current, std::vector<MeasurementPartition> &out) {
    if (covered == 0xFFFF) {
        auto cells = current;
        std::sort(cells.begin(), cells.end(),
                  [](const EpistemicState &a, const EpistemicState &b) { return a.mask() < b.mask(); });
        out.emplace_back(std::move(cells));
        return;
    }
    int lowest = 0;
    while ((covered >> lowest) & 1U) ++lowest;
    for (const auto &s : states) {
        if (!s.contains(lowest) || (s.mask() & covered)) continue;
        current.push_back(s);
        extend_partitions(states, static_cast<CellMask>(covered | s.mask()), current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<MeasurementPartition> enumerate_partitions() {
    const auto states = pure_states(2);
    std::vector<MeasurementPartition> out;
    std::vector<EpistemicState> current;
    extend_partitions(states, 0, current, out);
    std::sort(out.begin(), out.end(), [](const MeasurementPartition &a, const MeasurementPartition &b) {
        return std::lexicographical_compare(
            a.cells().begin(), a.cells().end(), b.cells().begin(), b.cells().end(),
            [](const EpistemicState &x, const EpistemicState &y) { return x.mask() < y.mask(); });
    });
    return out;
}

namespace {

int draw_cell(CellMask mask, SplitMix64 &rng) {
    const auto k = rng.uniform(static_cast<std::uint32_t>(std::popcount(static_cast<unsigned>(mask))));
    std::uint32_t seen = 0;
    for (int c = 0; c < 16; ++c) {
        if (!((mask >> c) & 1U)) continue;
        if (seen++ == k) return c;
    }
    return -1;
}

}  // namespace

OnticSample prepare_sample(const EpistemicState &state, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const int ontic = draw_cell(state.mask(), rng);
    return OnticSample{ontic, state, rng.state()};
}

MeasureResult measure(const MeasurementPartition &partition, const OnticSample &sample) {
    if (partition.n_bits() != sample.epistemic.n_bits()) {
        throw Error(ErrorKind::DimensionMismatch, "partition and sample describe different systems");
    }
    const std::size_t outcome = partition.outcome_of(sample.ontic);
    const EpistemicState &cell = partition.cells()[outcome];
    SplitMix64 rng(sample.rng_seed);
    const int ontic = draw_cell(cell.mask(), rng);
    return MeasureResult{outcome, OnticSample{ontic, cell, rng.state()}};
}

}  // namespace toybit
