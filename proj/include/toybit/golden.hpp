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

#include <cstddef>
#include <string>

#include "toybit/json_io.hpp"
#include "toybit/permutation.hpp"
#include "toybit/scaled_matrix.hpp"

namespace toybit {

/// Values computed once by tools/derive_golden and stored in
/// data/golden.json; the build embeds that file.
struct GoldenData {
    ScaledMatrix conj_image;
    ScaledMatrix p1;
    ScaledMatrix p2;
    Permutation p3;
    std::size_t conj_candidates = 0;
    std::size_t tg2_class_count = 0;
    std::string battery_stage;
    std::string battery_spekkens;
    std::string battery_clifford;

    bool operator==(const GoldenData &) const = default;
};

/// The embedded values.
const GoldenData &golden();

/// Recomputes every value from scratch (a few seconds).
GoldenData derive_golden_data();

Json golden_to_json(const GoldenData &g);
GoldenData golden_from_json(const Json &j);

}  // namespace toybit
