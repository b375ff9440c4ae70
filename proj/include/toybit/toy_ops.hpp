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
#include <optional>
#include <string_view>
#include <vector>

#include "toybit/epistemic.hpp"
#include "toybit/finite_group.hpp"
#include "toybit/permutation.hpp"
#include "toybit/scaled_matrix.hpp"

namespace toybit {

/// Linear action of an ontic permutation: o_j -> o_{p(j)}.
ScaledMatrix toy_permutation(std::string_view cycles, std::size_t degree = 4);

ScaledMatrix h_tilde();
ScaledMatrix sqrt_z_tilde();

FiniteGroup<ScaledMatrix> s4_group();
FiniteGroup<ScaledMatrix> a4_group();
/// Generated by H̃, √Z̃, (12), (1234) in that order, so H̃ is element 1.
FiniteGroup<ScaledMatrix> tg1_group();

/// o_ij -> o_ji
ScaledMatrix toy_swap();

/// Images of conj, CNOT and H⊗I under the published isomorphism, as printed.
ScaledMatrix printed_conj_image();
ScaledMatrix cnot_image();
ScaledMatrix h_i_image();

std::vector<std::uint64_t> pure_support_masks(int n_bits);

/// Ontic permutations preserving the 60 pure two-bit supports.
FiniteGroup<Permutation> spekkens_group();

/// The image state, or nullopt when the image vector is not the indicator of a valid state.
std::optional<EpistemicState> apply_operation(const ScaledMatrix &op, const EpistemicState &state);

/// Permutation of pure_states(1) induced by a 4x4 operation; throws Error(SetNotInvariant).
Permutation six_state_action(const ScaledMatrix &op);

}  // namespace toybit
