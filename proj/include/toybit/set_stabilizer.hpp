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
#include <span>
#include <vector>

#include "toybit/finite_group.hpp"
#include "toybit/permutation.hpp"

namespace toybit {

/// Every permutation of n <= 64 points mapping the block family onto itself,
/// in backtracking order. Blocks are bitmasks; duplicates are ignored.
std::vector<Permutation> set_stabilizer_elements(int n, std::span<const std::uint64_t> blocks);

FiniteGroup<Permutation> set_stabilizer(int n, std::span<const std::uint64_t> blocks);
FiniteGroup<Permutation> set_stabilizer(int n, const std::vector<std::vector<int>> &blocks);

}  // namespace toybit
