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

#include "linear_search.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

#include "toybit/epistemic.hpp"

namespace toybit::detail {

LinearSearch::LinearSearch(int n_bits) : dim_(num_cells(n_bits)) {
    for (const auto &s : pure_states(n_bits)) {
        state_of_mask_.emplace(s.mask(), static_cast<int>(states_.size()));
        states_.push_back(s.indicator());
    }
    const std::size_t n = states_.size();
    gram_.assign(n, std::vector<int>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (int c = 0; c < dim_; ++c) gram_[a][b] += static_cast<int>(states_[a][static_cast<std::size_t>(c)] * states_[b][static_cast<std::size_t>(c)]);

    // Greedy basis in list order.
    std::vector<std::vector<Rational>> echelon;
    std::vector<int> pivots;
    for (std::size_t k = 0; k < n && basis_.size() < static_cast<std::size_t>(dim_); ++k) {
        std::vector<Rational> v(states_[k].begin(), states_[k].end());
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            const Rational f = v[static_cast<std::size_t>(pivots[r])];
            if (f.numerator() == 0) continue;
            for (int c = 0; c < dim_; ++c) v[static_cast<std::size_t>(c)] -= f * echelon[r][static_cast<std::size_t>(c)];
        }
        int pivot = 0;
        while (pivot < dim_ && v[static_cast<std::size_t>(pivot)].numerator() == 0) ++pivot;
        if (pivot == dim_) continue;
        const Rational lead = v[static_cast<std::size_t>(pivot)];
        for (auto &x : v) x /= lead;
        for (std::size_t r = 0; r < echelon.size(); ++r) {
            const Rational f = echelon[r][static_cast<std::size_t>(pivot)];
            if (f.numerator() == 0) continue;
            for (int c = 0; c < dim_; ++c) echelon[r][static_cast<std::size_t>(c)] -= f * v[static_cast<std::size_t>(c)];
        }
        echelon.push_back(std::move(v));
        pivots.push_back(pivot);
        basis_.push_back(static_cast<int>(k));
    }
    if (basis_.size() != static_cast<std::size_t>(dim_)) throw std::logic_error("pure states do not span");

    // Inverse of the matrix whose columns are the basis indicators.
    const auto d = static_cast<std::size_t>(dim_);
    std::vector<std::vector<Rational>> aug(d, std::vector<Rational>(2 * d, Rational(0)));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) aug[r][c] = states_[static_cast<std::size_t>(basis_[c])][r];
        aug[r][d + r] = Rational(1);
    }
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        while (aug[p][c].numerator() == 0) ++p;
        std::swap(aug[p], aug[c]);
        const Rational lead = aug[c][c];
        for (auto &x : aug[c]) x /= lead;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == c || aug[r][c].numerator() == 0) continue;
            const Rational f = aug[r][c];
            for (std::size_t k = 0; k < 2 * d; ++k) aug[r][k] -= f * aug[c][k];
        }
    }
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) denom_ = std::lcm(denom_, aug[r][d + c].denominator());
    inverse_num_.assign(d, std::vector<std::int64_t>(d));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            const Rational x = aug[r][d + c] * Rational(denom_);
            inverse_num_[r][c] = x.numerator();
        }

    coords_.assign(n, std::vector<std::int64_t>(d, 0));
    checks_.assign(d + 1, {});
    std::vector<bool> in_basis(n, false);
    for (int b : basis_) in_basis[static_cast<std::size_t>(b)] = true;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) coords_[k][r] += inverse_num_[r][c] * states_[k][c];
        if (in_basis[k]) continue;
        std::size_t depth = 0;
        for (std::size_t r = 0; r < d; ++r) {
            if (coords_[k][r] != 0) depth = r + 1;
        }
        checks_[depth].push_back(static_cast<int>(k));
    }
}

bool LinearSearch::check_depth(std::size_t depth, const std::vector<int> &image) const {
    const auto d = static_cast<std::size_t>(dim_);
    std::vector<std::int64_t> u(d);
    for (int k : checks_[depth]) {
        std::fill(u.begin(), u.end(), 0);
        const auto &coef = coords_[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < depth; ++i) {
            if (coef[i] == 0) continue;
            const auto &w = states_[static_cast<std::size_t>(image[i])];
            for (std::size_t c = 0; c < d; ++c) u[c] += coef[i] * w[c];
        }
        std::uint64_t mask = 0;
        for (std::size_t c = 0; c < d; ++c) {
            if (u[c] == denom_) {
                mask |= std::uint64_t{1} << c;
            } else if (u[c] != 0) {
                return false;
            }
        }
        if (!state_of_mask_.contains(mask)) return false;
    }
    return true;
}

std::optional<ScaledMatrix> LinearSearch::leaf_matrix(const std::vector<int> &image) const {
    const auto d = static_cast<std::size_t>(dim_);
    std::vector<Rational> entries(d * d);
    std::int64_t common = 1;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            std::int64_t num = 0;
            for (std::size_t i = 0; i < d; ++i) num += states_[static_cast<std::size_t>(image[i])][r] * inverse_num_[i][c];
            const Rational x(num, denom_);
            if (!std::has_single_bit(static_cast<std::uint64_t>(x.denominator()))) return std::nullopt;
            common = std::max(common, x.denominator());
            entries[r * d + c] = x;
        }
    }
    std::vector<std::int64_t> nums(d * d);
    for (std::size_t k = 0; k < d * d; ++k) nums[k] = (entries[k] * Rational(common)).numerator();
    ScaledMatrix m(dim_, std::move(nums), std::countr_zero(static_cast<std::uint64_t>(common)));
    if (!m.is_orthogonal()) return std::nullopt;
    return m;
}

void LinearSearch::extend(std::size_t depth, std::vector<int> &image, std::vector<bool> &used,
                          std::vector<ScaledMatrix> &out) const {
    if (depth == basis_.size()) {
        if (auto m = leaf_matrix(image)) out.push_back(std::move(*m));
        return;
    }
    const auto source = static_cast<std::size_t>(basis_[depth]);
    for (int q = 0; q < num_states(); ++q) {
        if (used[static_cast<std::size_t>(q)]) continue;
        bool gram_ok = true;
        for (std::size_t j = 0; j < depth && gram_ok; ++j) {
            gram_ok = gram_[static_cast<std::size_t>(q)][static_cast<std::size_t>(image[j])] ==
                      gram_[source][static_cast<std::size_t>(basis_[j])];
        }
        if (!gram_ok) continue;
        image[depth] = q;
        if (!check_depth(depth + 1, image)) continue;
        used[static_cast<std::size_t>(q)] = true;
        extend(depth + 1, image, used, out);
        used[static_cast<std::size_t>(q)] = false;
    }
}

std::vector<ScaledMatrix> LinearSearch::branch(int first_image) const {
    std::vector<int> image(basis_.size(), -1);
    std::vector<bool> used(states_.size(), false);
    std::vector<ScaledMatrix> out;
    image[0] = first_image;
    if (!check_depth(1, image)) return out;
    used[static_cast<std::size_t>(first_image)] = true;
    extend(1, image, used, out);
    return out;
}

}  // namespace toybit::detail
