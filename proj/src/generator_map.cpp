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

#include "toybit/generator_map.hpp"

namespace toybit {

std::string_view to_string(MapStatus status) {
    switch (status) {
        case MapStatus::ConsistentIsomorphism:
            return "consistent-isomorphism";
        case MapStatus::ConsistentHomomorphism:
            return "consistent-homomorphism";
        case MapStatus::Inconsistent:
            return "inconsistent";
    }
    return "unknown";
}

GeneratorMap map_into_table(const CayleyTable &src, const CayleyTable &dst,
                            std::span<const CayleyTable::Index> images) {
    if (images.size() != src.num_generators()) throw std::invalid_argument("one image per generator required");
    constexpr auto kUnset = CayleyTable::kUnset;
    std::vector<CayleyTable::Index> image(src.order(), kUnset);
    image[CayleyTable::kIdentity] = CayleyTable::kIdentity;
    for (CayleyTable::Index i = 0; i < src.order(); ++i) {
        for (std::size_t s = 0; s < images.size(); ++s) {
            const auto gen = static_cast<CayleyTable::Generator>(s);
            const auto j = src.step(i, gen);
            const auto product = dst.multiply(image[i], images[s]);
            if (image[j] == kUnset) {
                image[j] = product;
            } else if (image[j] != product) {
                return {MapStatus::Inconsistent, 0, detail::witness_words(src, i, gen, j)};
            }
        }
    }
    std::vector<bool> seen(dst.order(), false);
    std::size_t distinct = 0;
    for (auto x : image) {
        if (!seen[x]) {
            seen[x] = true;
            ++distinct;
        }
    }
    const auto status = distinct == src.order() ? MapStatus::ConsistentIsomorphism
                                                : MapStatus::ConsistentHomomorphism;
    return {status, distinct, std::nullopt};
}

}  // namespace toybit
