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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "toybit/cayley_table.hpp"
#include "toybit/errors.hpp"
#include "toybit/finite_group.hpp"
#include "toybit/permutation.hpp"

namespace toybit {

using Index = CayleyTable::Index;

/// Subset of a group's element indices, kept both as a sorted list and as a
/// membership mask over the whole group.
class Subgroup {
   public:
    Subgroup() = default;
    Subgroup(std::size_t group_order, std::vector<Index> elements);

    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<Index> &elements() const noexcept { return elements_; }
    bool contains(Index i) const noexcept { return member_[i]; }

   private:
    std::vector<Index> elements_;
    std::vector<bool> member_;
};

std::map<int, std::size_t> element_order_histogram(const CayleyTable &table);

template <GroupPayload E>
std::map<int, std::size_t> element_order_histogram(const FiniteGroup<E> &g) {
    return element_order_histogram(g.table());
}

struct ConjugacyClass {
    Index representative;  // smallest index in the class
    std::size_t size;
};

struct ClassPartition {
    std::vector<ConjugacyClass> classes;  // ordered by representative
    std::vector<std::uint32_t> class_of;
};

ClassPartition conjugacy_classes(const CayleyTable &table);

/// Sorted class sizes.
std::vector<std::size_t> class_sizes(const ClassPartition &classes);

Subgroup subgroup_closure(const CayleyTable &table, std::span<const Index> generators);
/// Order of <generators>, or bound + 1 as soon as it exceeds bound.
std::size_t bounded_closure_order(const CayleyTable &table, std::span<const Index> generators, std::size_t bound);

Subgroup center(const CayleyTable &table);
Subgroup normal_closure(const CayleyTable &table, std::span<const Index> seeds);
Subgroup derived_subgroup(const CayleyTable &table);

/// Left coset labels of h; labels are numbered in order of first element index.
std::vector<std::uint32_t> left_coset_labels(const CayleyTable &table, const Subgroup &h);

/// Abelian invariants of G/G' as prime powers, ascending.
std::vector<std::uint64_t> abelian_invariants(const CayleyTable &table);

Subgroup sylow_subgroup(const CayleyTable &table, std::uint64_t p);
/// Largest normal p-subgroup: the classes lying entirely inside a Sylow p-subgroup.
Subgroup p_core(const CayleyTable &table, std::uint64_t p);
/// Number of subgroups K with K ∩ N = 1 and KN = G, for normal N.
std::uint64_t complement_count(const CayleyTable &table, const Subgroup &normal);

struct BatteryStage {
    std::string name;
    std::string first;
    std::string second;
};

struct BatteryVerdict {
    bool distinguished = false;
    std::string stage;                // first differing stage, empty if none
    std::vector<BatteryStage> stages;  // every stage that ran, in order
};

/// Compares order, element-order histogram, class sizes, center order,
/// derived subgroup order, abelianization, and complements of O_2. Stops at
/// the first difference. Agreement never implies isomorphism.
BatteryVerdict invariant_battery(const CayleyTable &a, const CayleyTable &b);

template <GroupPayload E, GroupPayload F>
BatteryVerdict invariant_battery(const FiniteGroup<E> &a, const FiniteGroup<F> &b) {
    return invariant_battery(a.table(), b.table());
}

/// Left-multiplication action of the group generators on left cosets of h.
std::vector<Permutation> coset_action_generators(const CayleyTable &table, const Subgroup &h);

/// Throws Error(NotASubgroup) unless every element of h lies in g.
template <GroupPayload E>
FiniteGroup<Permutation> coset_action(const FiniteGroup<E> &g, const FiniteGroup<E> &h) {
    std::vector<Index> members;
    members.reserve(h.order());
    for (const auto &e : h.elements()) {
        auto idx = g.find(e);
        if (!idx) throw Error(ErrorKind::NotASubgroup, "element of h is not in g");
        members.push_back(*idx);
    }
    if (g.order() % h.order() != 0) throw Error(ErrorKind::NotASubgroup, "subgroup order does not divide group order");
    auto gens = coset_action_generators(g.table(), Subgroup(g.order(), std::move(members)));
    return FiniteGroup<Permutation>::closure(std::move(gens));
}

struct Primitivity {
    bool primitive;
    std::vector<Permutation::Point> block;  // smallest nontrivial block when imprimitive
};

/// Throws Error(NotTransitive) when the generators do not act transitively.
Primitivity is_primitive(std::span<const Permutation> generators);

inline Primitivity is_primitive(const FiniteGroup<Permutation> &action) {
    return is_primitive(std::span<const Permutation>(action.generators()));
}

std::string format_histogram(const std::map<int, std::size_t> &histogram);

}  // namespace toybit
