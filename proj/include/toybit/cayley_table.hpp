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
#include <span>
#include <vector>

namespace toybit {

/// Index-level view of an enumerated group: element 0 is the identity, every
/// element stores its breadth-first generator word, and right multiplication
/// by each generator is tabulated. General products walk the word of the
/// right factor, so every algorithm built on this table is payload-agnostic.
class CayleyTable {
   public:
    using Index = std::uint32_t;
    using Generator = std::uint8_t;
    static constexpr Index kIdentity = 0;
    static constexpr Index kUnset = 0xFFFFFFFFU;

    CayleyTable() = default;
    explicit CayleyTable(std::size_t num_generators);

    // Builder interface, used while enumerating a closure.
    Index add_identity();
    Index add_element(Index parent, Generator gen);
    void set_step(Index from, Generator gen, Index to);
    /// Computes inverses; call once every step is set.
    void finalize();

    std::size_t order() const noexcept { return parent_.size(); }
    std::size_t num_generators() const noexcept { return num_generators_; }

    Index step(Index from, Generator gen) const noexcept { return steps_[from * num_generators_ + gen]; }
    Index generator_element(std::size_t gen) const noexcept { return step(kIdentity, static_cast<Generator>(gen)); }
    Index parent(Index i) const noexcept { return parent_[i]; }
    Generator parent_generator(Index i) const noexcept { return parent_gen_[i]; }
    std::span<const Generator> word(Index i) const noexcept {
        return {words_.data() + word_offset_[i], word_offset_[i + 1] - word_offset_[i]};
    }

    Index multiply(Index a, Index b) const noexcept;
    /// Product of a word in the generators, evaluated from the identity.
    Index evaluate(std::span<const Generator> word) const noexcept;
    Index inverse(Index i) const noexcept { return inverse_[i]; }
    /// g x g^-1
    Index conjugate(Index x, Index g) const noexcept { return multiply(multiply(g, x), inverse_[g]); }
    Index power(Index x, std::uint64_t k) const noexcept;
    int element_order(Index x) const noexcept;

   private:
    std::size_t num_generators_ = 0;
    std::vector<Index> steps_;
    std::vector<Index> parent_;
    std::vector<Generator> parent_gen_;
    std::vector<std::size_t> word_offset_{0};
    std::vector<Generator> words_;
    std::vector<Index> inverse_;
};

}  // namespace toybit
