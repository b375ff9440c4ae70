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

#include "toybit/epistemic.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace toybit {

namespace {

constexpr std::array<std::array<int, 2>, 6> kSingleBitPairs = {{
    {0, 2}, {1, 3}, {1, 2}, {0, 3}, {0, 1}, {2, 3},
}};

CellMask pair_mask(const std::array<int, 2> &p) {
    return static_cast<CellMask>((1U << p[0]) | (1U << p[1]));
}

CellMask product_mask(CellMask rows, CellMask cols) {
    CellMask m = 0;
    for (int i = 0; i < 4; ++i) {
        if (!((rows >> i) & 1U)) continue;
        for (int j = 0; j < 4; ++j) {
            if ((cols >> j) & 1U) m |= static_cast<CellMask>(1U << cell_index(i, j));
        }
    }
    return m;
}

CellMask row_marginal(CellMask m) {
    CellMask r = 0;
    for (int i = 0; i < 4; ++i) {
        if ((m >> (4 * i)) & 0xFU) r |= static_cast<CellMask>(1U << i);
    }
    return r;
}

CellMask col_marginal(CellMask m) {
    CellMask c = 0;
    for (int i = 0; i < 4; ++i) c |= static_cast<CellMask>((m >> (4 * i)) & 0xFU);
    return c;
}

const std::set<CellMask> &two_bit_catalog() {
    static const std::set<CellMask> catalog = [] {
        std::set<CellMask> s;
        for (const auto &st : pure_states(2)) s.insert(st.mask());
        for (const auto &st : mixed_catalog()) s.insert(st.mask());
        return s;
    }();
    return catalog;
}

std::vector<CellMask> two_bit_pure_masks() {
    std::set<CellMask> s;
    for (const auto &a : kSingleBitPairs) {
        for (const auto &b : kSingleBitPairs) s.insert(product_mask(pair_mask(a), pair_mask(b)));
    }
    std::array<int, 4> perm = {0, 1, 2, 3};
    do {
        CellMask m = 0;
        for (int i = 0; i < 4; ++i) m |= static_cast<CellMask>(1U << cell_index(i, perm[i]));
        s.insert(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {s.begin(), s.end()};
}

}  // namespace

int EpistemicState::size() const noexcept { return std::popcount(static_cast<unsigned>(mask_)); }

std::vector<int> EpistemicState::cells() const {
    std::vector<int> out;
    for (int c = 0; c < num_cells(n_bits_); ++c) {
        if (contains(c)) out.push_back(c);
    }
    return out;
}

std::vector<std::int64_t> EpistemicState::indicator() const {
    std::vector<std::int64_t> v(static_cast<std::size_t>(num_cells(n_bits_)), 0);
    for (int c : cells()) v[static_cast<std::size_t>(c)] = 1;
    return v;
}

bool is_product_support(CellMask mask) {
    return mask != 0 && product_mask(row_marginal(mask), col_marginal(mask)) == mask;
}

bool is_permutation_pattern(CellMask mask) {
    return std::popcount(static_cast<unsigned>(mask)) == 4 && row_marginal(mask) == 0xF &&
           col_marginal(mask) == 0xF;
}

std::optional<ErrorKind> validate_support(int n_bits, CellMask mask) {
    if (n_bits != 1 && n_bits != 2) return ErrorKind::InvalidSupport;
    const int cells = num_cells(n_bits);
    if (cells < 16 && (mask >> cells) != 0) return ErrorKind::InvalidSupport;
    const int size = std::popcount(static_cast<unsigned>(mask));
    if (size == 0) return ErrorKind::InvalidSupport;

    if (n_bits == 1) {
        if (size == 1) return ErrorKind::KnowledgeBalanceViolation;
        if (size != 2 && size != 4) return ErrorKind::InvalidSupport;
        return std::nullopt;
    }

    if (size < 4) return ErrorKind::KnowledgeBalanceViolation;
    if (size != 4 && size != 8 && size != 16) return ErrorKind::InvalidSupport;
    // Each subsystem on its own must also leave at least half unknown.
    if (std::popcount(static_cast<unsigned>(row_marginal(mask))) < 2 ||
        std::popcount(static_cast<unsigned>(col_marginal(mask))) < 2) {
        return ErrorKind::KnowledgeBalanceViolation;
    }
    if (!two_bit_catalog().contains(mask)) return ErrorKind::NotInCatalog;
    return std::nullopt;
}

bool is_valid_support(int n_bits, CellMask mask) { return !validate_support(n_bits, mask); }

EpistemicState EpistemicState::from_mask(int n_bits, CellMask mask) {
    if (auto err = validate_support(n_bits, mask)) {
        std::ostringstream msg;
        msg << "support 0x" << std::hex << mask << std::dec << " is not a valid " << n_bits
            << "-bit epistemic state";
        throw Error(*err, msg.str());
    }
    return EpistemicState(n_bits, mask);
}

EpistemicState EpistemicState::from_cells(int n_bits, std::span<const int> cells) {
    if (n_bits != 1 && n_bits != 2) throw Error(ErrorKind::InvalidSupport, "n_bits must be 1 or 2");
    CellMask mask = 0;
    for (int c : cells) {
        if (c < 0 || c >= num_cells(n_bits)) {
            throw Error(ErrorKind::InvalidSupport, "cell " + std::to_string(c) + " out of range");
        }
        mask |= static_cast<CellMask>(1U << c);
    }
    return from_mask(n_bits, mask);
}

EpistemicState make_epistemic(int n_bits, std::span<const int> support) {
    return EpistemicState::from_cells(n_bits, support);
}

EpistemicState make_epistemic(int n_bits, std::initializer_list<int> support) {
    return EpistemicState::from_cells(n_bits, std::span<const int>(support.begin(), support.size()));
}

EpistemicState tensor(const EpistemicState &a, const EpistemicState &b) {
    if (a.n_bits() != 1 || b.n_bits() != 1) {
        throw Error(ErrorKind::DimensionMismatch, "tensor composes two single toy bits");
    }
    return EpistemicState::from_mask(2, product_mask(a.mask(), b.mask()));
}

std::vector<EpistemicState> pure_states(int n_bits) {
    std::vector<EpistemicState> out;
    if (n_bits == 1) {
        for (const auto &p : kSingleBitPairs) out.push_back(EpistemicState::from_mask(1, pair_mask(p)));
    } else if (n_bits == 2) {
        // Built directly: from_mask consults the catalog, which is built from this list.
        static const std::vector<CellMask> masks = two_bit_pure_masks();
        for (CellMask m : masks) out.push_back(EpistemicState(2, m));
    } else {
        throw Error(ErrorKind::InvalidSupport, "n_bits must be 1 or 2");
    }
    return out;
}

std::vector<EpistemicState> mixed_catalog() {
    std::set<CellMask> s;
    for (const auto &p : kSingleBitPairs) {
        s.insert(product_mask(pair_mask(p), 0xF));
        s.insert(product_mask(0xF, pair_mask(p)));
        for (const auto &q : kSingleBitPairs) {
            const CellMask rows = pair_mask(p);
            const CellMask cols = pair_mask(q);
            s.insert(static_cast<CellMask>(product_mask(rows, cols) |
                                           product_mask(static_cast<CellMask>(~rows & 0xF),
                                                        static_cast<CellMask>(~cols & 0xF))));
        }
    }
    s.insert(0xFFFF);
    std::vector<EpistemicState> out;
    for (CellMask m : s) out.push_back(EpistemicState(2, m));
    return out;
}

Rational outcome_probability(const EpistemicState &cell, const EpistemicState &state) {
    if (cell.n_bits() != state.n_bits()) {
        throw Error(ErrorKind::DimensionMismatch, "cell and state describe different systems");
    }
    const auto overlap = std::popcount(static_cast<unsigned>(cell.mask() & state.mask()));
    return Rational(overlap, state.size());
}

bool is_perfectly_correlated(const EpistemicState &state) {
    return state.n_bits() == 2 && state.is_pure() && is_permutation_pattern(state.mask());
}

std::string render_grid(const EpistemicState &state) {
    std::ostringstream out;
    const int rows = state.n_bits() == 1 ? 1 : 4;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < 4; ++j) {
            out << (state.contains(state.n_bits() == 1 ? j : cell_index(i, j)) ? "#" : ".");
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace toybit
