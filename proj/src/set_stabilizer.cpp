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

#include "toybit/set_stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace toybit {

namespace {

struct Search {
    int n;
    std::vector<std::uint64_t> blocks;
    std::unordered_set<std::uint64_t> block_set;
    std::vector<int> degree;              // blocks containing each point
    std::vector<int> order;               // points in assignment order
    std::vector<std::vector<int>> touching;  // blocks containing each point
    std::vector<int> image;
    std::uint64_t used = 0;
    std::vector<Permutation> found;

    // A block whose mapped points so far land in no block of the same size
    // can never be completed.
    bool block_feasible(int b, std::uint64_t assigned) const {
        const std::uint64_t mapped = blocks[static_cast<std::size_t>(b)] & assigned;
        std::uint64_t partial = 0;
        for (std::uint64_t m = mapped; m; m &= m - 1) partial |= std::uint64_t{1} << image[static_cast<std::size_t>(std::countr_zero(m))];
        const int size = std::popcount(blocks[static_cast<std::size_t>(b)]);
        if (mapped == blocks[static_cast<std::size_t>(b)]) return block_set.contains(partial);
        return std::any_of(blocks.begin(), blocks.end(), [&](std::uint64_t t) {
            return std::popcount(t) == size && (t & partial) == partial;
        });
    }

    void extend(std::size_t depth, std::uint64_t assigned) {
        if (depth == order.size()) {
            std::vector<Permutation::Point> img(image.begin(), image.end());
            found.emplace_back(std::move(img));
            return;
        }
        const int p = order[depth];
        for (int q = 0; q < n; ++q) {
            if ((used >> q) & 1U || degree[static_cast<std::size_t>(q)] != degree[static_cast<std::size_t>(p)]) continue;
            image[static_cast<std::size_t>(p)] = q;
            const std::uint64_t now = assigned | (std::uint64_t{1} << p);
            const bool ok = std::all_of(touching[static_cast<std::size_t>(p)].begin(),
                                        touching[static_cast<std::size_t>(p)].end(),
                                        [&](int b) { return block_feasible(b, now); });
            if (!ok) continue;
            used |= std::uint64_t{1} << q;
            extend(depth + 1, now);
            used &= ~(std::uint64_t{1} << q);
        }
    }
};

}  // namespace

std::vector<Permutation> set_stabilizer_elements(int n, std::span<const std::uint64_t> blocks) {
    if (n <= 0 || n > 64) throw std::invalid_argument("set_stabilizer supports 1..64 points");
    Search s;
    s.n = n;
    for (auto b : blocks) {
        if (n < 64 && (b >> n)) throw std::invalid_argument("block mentions a point outside the domain");
        if (s.block_set.insert(b).second) s.blocks.push_back(b);
    }
    s.degree.assign(static_cast<std::size_t>(n), 0);
    s.touching.assign(static_cast<std::size_t>(n), {});
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
        for (int p = 0; p < n; ++p) {
            if ((s.blocks[b] >> p) & 1U) {
                ++s.degree[static_cast<std::size_t>(p)];
                s.touching[static_cast<std::size_t>(p)].push_back(static_cast<int>(b));
            }
        }
    }
    s.order.resize(static_cast<std::size_t>(n));
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        return s.degree[static_cast<std::size_t>(a)] > s.degree[static_cast<std::size_t>(b)];
    });
    s.image.assign(static_cast<std::size_t>(n), -1);
    s.extend(0, 0);
    return std::move(s.found);
}

FiniteGroup<Permutation> set_stabilizer(int n, std::span<const std::uint64_t> blocks) {
    return FiniteGroup<Permutation>::from_elements(set_stabilizer_elements(n, blocks));
}

FiniteGroup<Permutation> set_stabilizer(int n, const std::vector<std::vector<int>> &blocks) {
    std::vector<std::uint64_t> masks;
    for (const auto &b : blocks) {
        std::uint64_t m = 0;
        for (int p : b) {
            if (p < 0 || p >= n) throw std::invalid_argument("block mentions a point outside the domain");
            m |= std::uint64_t{1} << p;
        }
        masks.push_back(m);
    }
    return set_stabilizer(n, masks);
}

}  // namespace toybit
