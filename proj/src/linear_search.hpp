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

// Shared setup for the serial and parallel linear-validity searches.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "toybit/scaled_matrix.hpp"

namespace toybit::detail {

class LinearSearch {
   public:
    explicit LinearSearch(int n_bits);

    int num_states() const noexcept { return static_cast<int>(states_.size()); }
    int rank() const noexcept { return static_cast<int>(basis_.size()); }

    /// Leaves below the branch where basis state 0 maps to `first_image`.
    std::vector<ScaledMatrix> branch(int first_image) const;

   private:
    void extend(std::size_t depth, std::vector<int> &image, std::vector<bool> &used,
                std::vector<ScaledMatrix> &out) const;
    bool check_depth(std::size_t depth, const std::vector<int> &image) const;
    std::optional<ScaledMatrix> leaf_matrix(const std::vector<int> &image) const;

    int dim_ = 0;
    std::vector<std::vector<std::int64_t>> states_;  // indicator vectors
    std::vector<std::vector<int>> gram_;
    std::vector<int> basis_;
    std::vector<std::vector<std::int64_t>> inverse_num_;  // basis matrix inverse times denom_
    std::int64_t denom_ = 1;
    std::vector<std::vector<std::int64_t>> coords_;  // inverse_num_ · state
    std::vector<std::vector<int>> checks_;           // states fully determined at each depth
    std::unordered_map<std::uint64_t, int> state_of_mask_;
};

}  // namespace toybit::detail
