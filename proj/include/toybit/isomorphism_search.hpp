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

#include <vector>

#include "toybit/finite_group.hpp"
#include "toybit/group_algorithms.hpp"
#include "toybit/permutation.hpp"
#include "toybit/scaled_matrix.hpp"

namespace toybit {

/// (i,j) -> (a(i), b(j)) on the 16 two-bit cells.
Permutation tensor_permutation(const Permutation &a, const Permutation &b);

struct IsomorphismImages {
    ScaledMatrix conj;
    ScaledMatrix p1;  // image of H⊗H
    ScaledMatrix p2;  // image of √Z⊗√Z
    std::size_t conj_candidates = 0;
};

/// Searches TG(2) for images of conj, H⊗H and √Z⊗√Z that, together with the
/// printed CNOT and H⊗I images, extend to an isomorphism from EC(2)/U(1).
/// conj candidates are tried by agreement with the printed conj image, then
/// by index; the two unknowns by index.
IsomorphismImages solve_isomorphism_images(const FiniteGroup<ScaledMatrix> &tg2);

/// Generator images in source order: conj, CNOT, H⊗I, H⊗H, √Z⊗√Z.
std::vector<ScaledMatrix> isomorphism_targets(const ScaledMatrix &conj, const ScaledMatrix &p1,
                                              const ScaledMatrix &p2);

/// (12)⊗(23) and I⊗(12).
std::vector<Permutation> maximal_subgroup_base();

/// First element c of the Spekkens group (index order) such that the base
/// together with c generates a subgroup of order 720 whose coset action is primitive.
Permutation solve_maximal_subgroup_generator(const FiniteGroup<Permutation> &spekkens);

}  // namespace toybit
