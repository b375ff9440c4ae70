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

#include "toybit/cayley_table.hpp"

#include <stdexcept>

namespace toybit {

CayleyTable::CayleyTable(std::size_t num_generators) : num_generators_(num_generators) {}

CayleyTable::Index CayleyTable::add_identity() {
    if (!parent_.empty()) throw std::logic_error("identity must be the first element");
    parent_.push_back(kUnset);
    parent_gen_.push_back(0);
    word_offset_.push_back(0);
    steps_.resize(num_generators_, kUnset);
    return kIdentity;
}

CayleyTable::Index CayleyTable::add_element(Index parent, Generator gen) {
    const auto idx = static_cast<Index>(parent_.size());
    parent_.push_back(parent);
    parent_gen_.push_back(gen);
    const auto w = word(parent);
    words_.insert(words_.end(), w.begin(), w.end());
    words_.push_back(gen);
    word_offset_.push_back(words_.size());
    steps_.resize(parent_.size() * num_generators_, kUnset);
    return idx;
}

void CayleyTable::set_step(Index from, Generator gen, Index to) { steps_[from * num_generators_ + gen] = to; }

void CayleyTable::finalize() {
    for (auto s : steps_) {
        if (s == kUnset) throw std::logic_error("incomplete Cayley table");
    }
    inverse_.assign(order(), kIdentity);
    std::vector<bool> done(order(), false);
    for (Index i = 0; i < order(); ++i) {
        if (done[i]) continue;
        // Walk the cyclic subgroup once: x^k and x^(ord-k) are mutual inverses.
        std::vector<Index> powers{kIdentity, i};
        while (powers.back() != kIdentity) powers.push_back(multiply(powers.back(), i));
        const std::size_t ord = powers.size() - 1;
        for (std::size_t k = 1; k < ord; ++k) {
            inverse_[powers[k]] = powers[ord - k];
            done[powers[k]] = true;
        }
        done[i] = true;
    }
}

CayleyTable::Index CayleyTable::multiply(Index a, Index b) const noexcept {
    Index r = a;
    for (Generator g : word(b)) r = step(r, g);
    return r;
}

CayleyTable::Index CayleyTable::evaluate(std::span<const Generator> w) const noexcept {
    Index r = kIdentity;
    for (Generator g : w) r = step(r, g);
    return r;
}

CayleyTable::Index CayleyTable::power(Index x, std::uint64_t k) const noexcept {
    Index result = kIdentity;
    Index base = x;
    while (k) {
        if (k & 1U) result = multiply(result, base);
        base = multiply(base, base);
        k >>= 1U;
    }
    return result;
}

int CayleyTable::element_order(Index x) const noexcept {
    int k = 1;
    for (Index r = x; r != kIdentity; r = multiply(r, x)) ++k;
    return k;
}

}  // namespace toybit
