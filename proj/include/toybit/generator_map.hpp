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

#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "toybit/cayley_table.hpp"
#include "toybit/finite_group.hpp"

namespace toybit {

enum class MapStatus { ConsistentIsomorphism, ConsistentHomomorphism, Inconsistent };

std::string_view to_string(MapStatus status);

/// Two source words with equal value whose images differ.
struct WordPair {
    std::vector<CayleyTable::Generator> lhs;
    std::vector<CayleyTable::Generator> rhs;
};

struct GeneratorMap {
    MapStatus status;
    std::size_t image_size;  // distinct images seen; 0 when inconsistent
    std::optional<WordPair> witness;
};

namespace detail {

inline WordPair witness_words(const CayleyTable &src, CayleyTable::Index from, CayleyTable::Generator s,
                              CayleyTable::Index to) {
    WordPair w;
    const auto a = src.word(from);
    w.lhs.assign(a.begin(), a.end());
    w.lhs.push_back(s);
    const auto b = src.word(to);
    w.rhs.assign(b.begin(), b.end());
    return w;
}

}  // namespace detail

/// Extends generator i -> images[i] along the Cayley graph of src. Every
/// non-tree edge is a relation of src, and each one is checked in the target.
template <GroupPayload E, GroupPayload F>
GeneratorMap map_by_generators(const FiniteGroup<E> &src, const std::vector<F> &images) {
    if (images.size() != src.generators().size()) throw std::invalid_argument("one image per generator required");
    const auto &table = src.table();
    std::vector<std::optional<F>> image(src.order());
    std::vector<std::string> keys(src.order());
    image[CayleyTable::kIdentity] = images.front().identity();
    keys[CayleyTable::kIdentity] = image[CayleyTable::kIdentity]->key();
    for (CayleyTable::Index i = 0; i < src.order(); ++i) {
        for (std::size_t s = 0; s < images.size(); ++s) {
            const auto gen = static_cast<CayleyTable::Generator>(s);
            const auto j = table.step(i, gen);
            F product = *image[i] * images[s];
            auto key = product.key();
            if (!image[j]) {
                image[j] = std::move(product);
                keys[j] = std::move(key);
            } else if (keys[j] != key) {
                return {MapStatus::Inconsistent, 0, detail::witness_words(table, i, gen, j)};
            }
        }
    }
    const std::unordered_set<std::string> distinct(keys.begin(), keys.end());
    const auto status = distinct.size() == src.order() ? MapStatus::ConsistentIsomorphism
                                                       : MapStatus::ConsistentHomomorphism;
    return {status, distinct.size(), std::nullopt};
}

/// As map_by_generators, with the target given by element indices into dst.
GeneratorMap map_into_table(const CayleyTable &src, const CayleyTable &dst,
                            std::span<const CayleyTable::Index> images);

}  // namespace toybit
