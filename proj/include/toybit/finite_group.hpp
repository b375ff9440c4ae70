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

#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "toybit/cayley_table.hpp"
#include "toybit/errors.hpp"

namespace toybit {

/// Element type usable in a FiniteGroup. key() must be equal exactly when
/// the elements are equal as group elements.
template <class E>
concept GroupPayload = requires(const E &a, const E &b) {
    { a * b } -> std::convertible_to<E>;
    { a.key() } -> std::convertible_to<std::string>;
    { a.identity() } -> std::convertible_to<E>;
};

template <GroupPayload E>
class FiniteGroup {
   public:
    using Index = CayleyTable::Index;
    static constexpr std::size_t kDefaultCap = 1'000'000;

    /// Breadth-first closure; elements are numbered in discovery order with
    /// generators tried in the given order. Throws Error(CapExceeded).
    static FiniteGroup closure(std::vector<E> generators, std::size_t cap = kDefaultCap) {
        auto g = try_closure(std::move(generators), cap);
        if (!g) {
            throw Error(ErrorKind::CapExceeded,
                        "closure exceeded " + std::to_string(cap) + " elements");
        }
        return std::move(*g);
    }

    /// As closure(), but returns nullopt instead of throwing when the cap is hit.
    static std::optional<FiniteGroup> try_closure(std::vector<E> generators, std::size_t cap = kDefaultCap) {
        if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
        if (generators.size() > 255) throw std::invalid_argument("at most 255 generators");
        FiniteGroup g;
        g.generators_ = std::move(generators);
        g.table_ = CayleyTable(g.generators_.size());
        g.insert(g.generators_.front().identity(), CayleyTable::kUnset, 0);
        for (Index i = 0; i < g.elements_.size(); ++i) {
            for (std::size_t s = 0; s < g.generators_.size(); ++s) {
                E product = g.elements_[i] * g.generators_[s];
                auto key = product.key();
                auto it = g.index_.find(key);
                Index j;
                if (it != g.index_.end()) {
                    j = it->second;
                } else {
                    if (g.elements_.size() >= cap) return std::nullopt;
                    j = g.insert(std::move(product), i, static_cast<CayleyTable::Generator>(s), std::move(key));
                }
                g.table_.set_step(i, static_cast<CayleyTable::Generator>(s), j);
            }
        }
        g.table_.finalize();
        return g;
    }

    /// Builds the group whose element set is exactly `elements`, choosing a
    /// generating subset greedily in list order. Throws std::invalid_argument
    /// if the list is not closed.
    static FiniteGroup from_elements(const std::vector<E> &elements) {
        if (elements.empty()) throw std::invalid_argument("empty element list");
        std::unordered_set<std::string> wanted;
        for (const auto &e : elements) wanted.insert(e.key());
        std::vector<E> gens;
        std::optional<FiniteGroup> current;
        const std::string identity_key = elements.front().identity().key();
        for (const auto &e : elements) {
            if (current && current->contains(e)) continue;
            if (e.key() == identity_key) continue;
            gens.push_back(e);
            current = try_closure(gens, wanted.size());
            if (!current) throw std::invalid_argument("element list is not closed under composition");
        }
        if (!current) {
            if (wanted.size() != 1 || !wanted.contains(identity_key)) {
                throw std::invalid_argument("element list is not closed under composition");
            }
            return closure({elements.front().identity()});
        }
        for (const auto &e : current->elements()) {
            if (!wanted.contains(e.key())) throw std::invalid_argument("element list is not closed under composition");
        }
        if (current->order() != wanted.size()) throw std::invalid_argument("element list is not closed under composition");
        return std::move(*current);
    }

    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<E> &generators() const noexcept { return generators_; }
    const std::vector<E> &elements() const noexcept { return elements_; }
    const E &element(Index i) const { return elements_[i]; }
    const CayleyTable &table() const noexcept { return table_; }

    std::optional<Index> find(const E &e) const { return find_key(e.key()); }
    std::optional<Index> find_key(const std::string &key) const {
        auto it = index_.find(key);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const E &e) const { return index_.contains(e.key()); }

    /// Key set, for element-for-element comparison of groups.
    std::unordered_set<std::string> key_set() const {
        std::unordered_set<std::string> out;
        out.reserve(index_.size());
        for (const auto &kv : index_) out.insert(kv.first);
        return out;
    }

   private:
    Index insert(E e, Index parent, CayleyTable::Generator gen, std::string key = {}) {
        if (key.empty()) key = e.key();
        const Index idx = parent == CayleyTable::kUnset ? table_.add_identity() : table_.add_element(parent, gen);
        index_.emplace(std::move(key), idx);
        elements_.push_back(std::move(e));
        return idx;
    }

    std::vector<E> generators_;
    std::vector<E> elements_;
    std::unordered_map<std::string, Index> index_;
    CayleyTable table_;
};

/// True when both groups have the same element keys.
template <GroupPayload E>
bool same_elements(const FiniteGroup<E> &a, const FiniteGroup<E> &b) {
    return a.order() == b.order() && a.key_set() == b.key_set();
}

}  // namespace toybit
