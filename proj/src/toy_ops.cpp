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

#include "toybit/toy_ops.hpp"

#include <bit>

#include "toybit/set_stabilizer.hpp"

namespace toybit {

namespace {

// (a/2) ⊗ (b/2): the printed 1/4 prefactor split over two orthogonal factors.
ScaledMatrix quarter_kron(const std::vector<std::int64_t> &a, const std::vector<std::int64_t> &b) {
    return ScaledMatrix(4, a, 1).kron(ScaledMatrix(4, b, 1));
}

}  // namespace

ScaledMatrix toy_permutation(std::string_view cycles, std::size_t degree) {
    return ScaledMatrix::from_permutation(Permutation::from_cycles(degree, cycles));
}

ScaledMatrix h_tilde() {
    return ScaledMatrix(4, {1, 1, 1, -1, 1, -1, 1, 1, 1, 1, -1, 1, -1, 1, 1, 1}, 1);
}

ScaledMatrix sqrt_z_tilde() {
    return ScaledMatrix(4, {1, 1, -1, 1, 1, 1, 1, -1, 1, -1, 1, 1, -1, 1, 1, 1}, 1);
}

FiniteGroup<ScaledMatrix> s4_group() {
    return FiniteGroup<ScaledMatrix>::closure({toy_permutation("(12)"), toy_permutation("(1234)")});
}

FiniteGroup<ScaledMatrix> a4_group() {
    return FiniteGroup<ScaledMatrix>::closure({toy_permutation("(123)"), toy_permutation("(12)(34)")});
}

FiniteGroup<ScaledMatrix> tg1_group() {
    return FiniteGroup<ScaledMatrix>::closure(
        {h_tilde(), sqrt_z_tilde(), toy_permutation("(12)"), toy_permutation("(1234)")});
}

ScaledMatrix toy_swap() {
    std::vector<Permutation::Point> img(16);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) img[static_cast<std::size_t>(cell_index(i, j))] = static_cast<Permutation::Point>(cell_index(j, i));
    }
    return ScaledMatrix::from_permutation(Permutation(std::move(img)));
}

ScaledMatrix printed_conj_image() {
    const std::vector<std::int64_t> c = {1, 1, -1, 1, 1, 1, 1, -1, -1, 1, 1, 1, 1, -1, 1, 1};
    return quarter_kron(c, c);
}

ScaledMatrix cnot_image() {
    const std::vector<std::int64_t> n = {-1, 1, 1, 1, 1, 1, -1, 1, 1, -1, 1, 1, 1, 1, 1, -1};
    return toy_swap() * quarter_kron(n, n);
}

ScaledMatrix h_i_image() {
    return quarter_kron({1, -1, 1, 1, -1, 1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1},
                        {1, 1, 1, -1, 1, 1, -1, 1, 1, -1, 1, 1, -1, 1, 1, 1});
}

std::vector<std::uint64_t> pure_support_masks(int n_bits) {
    std::vector<std::uint64_t> out;
    for (const auto &s : pure_states(n_bits)) out.push_back(s.mask());
    return out;
}

FiniteGroup<Permutation> spekkens_group() { return set_stabilizer(16, pure_support_masks(2)); }

std::optional<EpistemicState> apply_operation(const ScaledMatrix &op, const EpistemicState &state) {
    if (op.dim() != num_cells(state.n_bits())) {
        throw Error(ErrorKind::DimensionMismatch, "operation and state describe different systems");
    }
    const auto image = op.apply(state.indicator());
    if (!image) return std::nullopt;
    CellMask mask = 0;
    for (std::size_t c = 0; c < image->size(); ++c) {
        const auto v = (*image)[c];
        if (v == 1) {
            mask |= static_cast<CellMask>(1U << c);
        } else if (v != 0) {
            return std::nullopt;
        }
    }
    if (!is_valid_support(state.n_bits(), mask)) return std::nullopt;
    return EpistemicState::from_mask(state.n_bits(), mask);
}

Permutation six_state_action(const ScaledMatrix &op) {
    const auto states = pure_states(1);
    std::vector<Permutation::Point> img(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) {
        const auto image = apply_operation(op, states[k]);
        std::size_t j = 0;
        while (image && j < states.size() && states[j] != *image) ++j;
        if (!image || j == states.size() || !image->is_pure()) {
            throw Error(ErrorKind::SetNotInvariant, "operation does not permute the pure states");
        }
        img[k] = static_cast<Permutation::Point>(j);
    }
    return Permutation(std::move(img));
}

}  // namespace toybit
