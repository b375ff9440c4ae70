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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "toybit/errors.hpp"

namespace toybit {

using Rational = boost::rational<std::int64_t>;

/// Bitmask over ontic cells. For two toy bits, cell (i, j) is bit 4i + j.
using CellMask = std::uint16_t;

constexpr int num_cells(int n_bits) { return n_bits == 1 ? 4 : 16; }
constexpr int cell_index(int row, int col) { return 4 * row + col; }

/// An observer's knowledge: the set of ontic cells the hidden variable may
/// occupy. Instances are always valid under the knowledge balance principle.
class EpistemicState {
   public:
    /// Throws Error with the violated rule when the support is not a valid state.
    static EpistemicState from_mask(int n_bits, CellMask mask);
    static EpistemicState from_cells(int n_bits, std::span<const int> cells);

    int n_bits() const noexcept { return n_bits_; }
    CellMask mask() const noexcept { return mask_; }
    int size() const noexcept;
    bool contains(int cell) const noexcept { return (mask_ >> cell) & 1U; }
    bool is_pure() const noexcept { return size() == (n_bits_ == 1 ? 2 : 4); }
    std::vector<int> cells() const;

    /// Indicator vector over all ontic cells.
    std::vector<std::int64_t> indicator() const;

    auto operator<=>(const EpistemicState &) const = default;

   private:
    EpistemicState(int n_bits, CellMask mask) : n_bits_(n_bits), mask_(mask) {}

    // The catalog builders construct states directly; validation is defined
    // in terms of their output.
    friend std::vector<EpistemicState> pure_states(int n_bits);
    friend std::vector<EpistemicState> mixed_catalog();

    int n_bits_;
    CellMask mask_;
};

/// Reason a support fails validation, or nullopt when it is a valid state.
std::optional<ErrorKind> validate_support(int n_bits, CellMask mask);
bool is_valid_support(int n_bits, CellMask mask);

EpistemicState make_epistemic(int n_bits, std::span<const int> support);
EpistemicState make_epistemic(int n_bits, std::initializer_list<int> support);

EpistemicState tensor(const EpistemicState &a, const EpistemicState &b);

/// Single bit: the six states ordered e13, e24, e23, e14, e12, e34 (antipodal
/// pairs adjacent, axes x, y, z). Two bits: the 60 maximal-knowledge states
/// ordered by mask.
std::vector<EpistemicState> pure_states(int n_bits);

/// Two-bit non-maximal states: e_ab (x) e1234, e1234 (x) e_ab, the correlated
/// mixtures e_ab (x) e_cd + e_mn (x) e_pq with complementary pairs, and the full set.
std::vector<EpistemicState> mixed_catalog();

bool is_product_support(CellMask mask);
/// Exactly one cell in every row and every column of the 4x4 grid.
bool is_permutation_pattern(CellMask mask);

/// |cell ∩ state| / |state|.
Rational outcome_probability(const EpistemicState &cell, const EpistemicState &state);

/// Pure correlated (permutation-pattern) states only.
bool is_perfectly_correlated(const EpistemicState &state);

/// Grid picture: one row of 4 cells for one bit, a 4x4 grid for two.
std::string render_grid(const EpistemicState &state);

}  // namespace toybit
