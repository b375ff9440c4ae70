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

#include "toybit/isomorphism_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "toybit/clifford.hpp"
#include "toybit/errors.hpp"
#include "toybit/generator_map.hpp"
#include "toybit/toy_ops.hpp"

namespace toybit {

Permutation tensor_permutation(const Permutation &a, const Permutation &b) {
    if (a.degree() != 4 || b.degree() != 4) throw std::invalid_argument("tensor factors act on four cells");
    std::vector<Permutation::Point> img(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            img[static_cast<std::size_t>(cell_index(i, j))] =
                static_cast<Permutation::Point>(cell_index(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]));
    return Permutation(std::move(img));
}

namespace {

Index require(const FiniteGroup<ScaledMatrix> &g, const ScaledMatrix &m, const char *what) {
    auto idx = g.find(m);
    if (!idx) throw std::logic_error(std::string(what) + " is not in TG(2)");
    return *idx;
}

int agreement(const ScaledMatrix &a, const ScaledMatrix &b) {
    int same = 0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) same += a.at(r, c) == b.at(r, c);
    return same;
}

bool consistent(const CayleyTable &src, const CayleyTable &dst, std::initializer_list<Index> images) {
    return map_into_table(src, dst, std::vector<Index>(images)).status != MapStatus::Inconsistent;
}

}  // namespace

IsomorphismImages solve_isomorphism_images(const FiniteGroup<ScaledMatrix> &tg2) {
    const auto id = gates::identity(1);
    const auto conj = gates::conj(2);
    const auto cnot = gates::cnot();
    const auto h_i = gates::h().kron(id);
    const auto h_h = gates::h().kron(gates::h());
    const auto sz_sz = gates::sqrt_z().kron(gates::sqrt_z());
    const auto three = FiniteGroup<CliffordOp>::closure({conj, cnot, h_i});
    const auto four = FiniteGroup<CliffordOp>::closure({conj, cnot, h_i, h_h});
    const auto five = FiniteGroup<CliffordOp>::closure({conj, cnot, h_i, h_h, sz_sz});

    const auto &dst = tg2.table();
    const Index cnot_img = require(tg2, cnot_image(), "CNOT image");
    const Index h_i_img = require(tg2, h_i_image(), "H⊗I image");
    const auto printed = printed_conj_image();

    std::vector<std::pair<int, Index>> candidates;  // (-agreement, index)
    for (Index c = 1; c < tg2.order(); ++c) {
        if (consistent(three.table(), dst, {c, cnot_img, h_i_img})) {
            candidates.emplace_back(-agreement(tg2.element(c), printed), c);
        }
    }
    std::sort(candidates.begin(), candidates.end());

    for (const auto &[score, c] : candidates) {
        for (Index p1 = 0; p1 < tg2.order(); ++p1) {
            if (!consistent(four.table(), dst, {c, cnot_img, h_i_img, p1})) continue;
            for (Index p2 = 0; p2 < tg2.order(); ++p2) {
                const Index images[] = {c, cnot_img, h_i_img, p1, p2};
                if (map_into_table(five.table(), dst, images).status == MapStatus::ConsistentIsomorphism) {
                    return {tg2.element(c), tg2.element(p1), tg2.element(p2), candidates.size()};
                }
            }
        }
    }
    throw std::logic_error("no isomorphism extends the printed generator images");
}

std::vector<ScaledMatrix> isomorphism_targets(const ScaledMatrix &conj, const ScaledMatrix &p1,
                                              const ScaledMatrix &p2) {
    return {conj, cnot_image(), h_i_image(), p1, p2};
}

std::vector<Permutation> maximal_subgroup_base() {
    return {tensor_permutation(Permutation::from_cycles(4, "(12)"), Permutation::from_cycles(4, "(23)")),
            tensor_permutation(Permutation::identity(4), Permutation::from_cycles(4, "(12)"))};
}

Permutation solve_maximal_subgroup_generator(const FiniteGroup<Permutation> &spekkens) {
    std::vector<Index> gens;
    for (const auto &p : maximal_subgroup_base()) {
        auto idx = spekkens.find(p);
        if (!idx) throw std::logic_error("base generator is not in the Spekkens group");
        gens.push_back(*idx);
    }
    gens.push_back(0);
    const auto &table = spekkens.table();
    for (Index c = 1; c < spekkens.order(); ++c) {
        gens.back() = c;
        if (bounded_closure_order(table, gens, 720) != 720) continue;
        const auto sub = subgroup_closure(table, gens);
        if (is_primitive(coset_action_generators(table, sub)).primitive) return spekkens.element(c);
    }
    throw std::logic_error("no generator completes an order-720 maximal subgroup");
}

}  // namespace toybit
