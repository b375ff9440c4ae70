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

#include <gtest/gtest.h>

#include <algorithm>

#include "toybit/finite_group.hpp"
#include "toybit/generator_map.hpp"
#include "toybit/group_algorithms.hpp"
#include "toybit/permutation.hpp"
#include "toybit/set_stabilizer.hpp"

using namespace toybit;

namespace {

Permutation cyc(std::size_t n, const char *c) { return Permutation::from_cycles(n, c); }

FiniteGroup<Permutation> sym4() { return FiniteGroup<Permutation>::closure({cyc(4, "(12)"), cyc(4, "(1234)")}); }
FiniteGroup<Permutation> alt4() { return FiniteGroup<Permutation>::closure({cyc(4, "(123)"), cyc(4, "(12)(34)")}); }

}  // namespace

TEST(Closure, OrdersOfSmallGroups) {
    EXPECT_EQ(sym4().order(), 24U);
    EXPECT_EQ(alt4().order(), 12U);
    EXPECT_EQ(FiniteGroup<Permutation>::closure({cyc(5, "(12345)")}).order(), 5U);
    EXPECT_EQ(FiniteGroup<Permutation>::closure({cyc(5, "(12)"), cyc(5, "(12345)")}).order(), 120U);
}

TEST(Closure, IdentityFirstAndGeneratorsInOrder) {
    const auto g = sym4();
    EXPECT_TRUE(g.element(0).is_identity());
    EXPECT_EQ(g.element(g.table().generator_element(0)), cyc(4, "(12)"));
    EXPECT_EQ(g.element(g.table().generator_element(1)), cyc(4, "(1234)"));
}

TEST(Closure, CapExceeded) {
    const std::vector<Permutation> gens{cyc(5, "(12)"), cyc(5, "(12345)")};
    EXPECT_FALSE(FiniteGroup<Permutation>::try_closure(gens, 50).has_value());
    try {
        FiniteGroup<Permutation>::closure(gens, 50);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
    }
}

TEST(Closure, FromElementsRecoversGroup) {
    const auto g = alt4();
    const auto h = FiniteGroup<Permutation>::from_elements(g.elements());
    EXPECT_EQ(h.key_set(), g.key_set());
}

TEST(CayleyTable, IndexArithmeticMatchesPayload) {
    const auto g = sym4();
    const auto &t = g.table();
    for (CayleyTable::Index a = 0; a < g.order(); ++a) {
        EXPECT_EQ(g.element(t.inverse(a)), g.element(a).inverse());
        EXPECT_EQ(t.evaluate(t.word(a)), a);
        for (CayleyTable::Index b = 0; b < g.order(); b += 5) {
            EXPECT_EQ(g.element(t.multiply(a, b)), g.element(a) * g.element(b));
        }
    }
    EXPECT_EQ(t.element_order(t.generator_element(1)), 4);
    EXPECT_EQ(t.power(t.generator_element(1), 4), CayleyTable::kIdentity);
}

TEST(Invariants, SymmetricGroupOnFourPoints) {
    const auto g = sym4();
    const auto &t = g.table();
    EXPECT_EQ(element_order_histogram(t), (std::map<int, std::size_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}));
    EXPECT_EQ(class_sizes(conjugacy_classes(t)), (std::vector<std::size_t>{1, 3, 6, 6, 8}));
    EXPECT_EQ(center(t).order(), 1U);
    EXPECT_EQ(derived_subgroup(t).order(), 12U);
    EXPECT_EQ(abelian_invariants(t), (std::vector<std::uint64_t>{2}));
    EXPECT_EQ(sylow_subgroup(t, 2).order(), 8U);
    EXPECT_EQ(sylow_subgroup(t, 3).order(), 3U);
    const auto o2 = p_core(t, 2);
    EXPECT_EQ(o2.order(), 4U);
    // Complements of the Klein four-group are the four point stabilizers.
    EXPECT_EQ(complement_count(t, o2), 4U);
}

TEST(Invariants, AlternatingGroupOnFourPoints) {
    const auto g = alt4();
    const auto &t = g.table();
    EXPECT_EQ(class_sizes(conjugacy_classes(t)), (std::vector<std::size_t>{1, 3, 4, 4}));
    EXPECT_EQ(derived_subgroup(t).order(), 4U);
    EXPECT_EQ(abelian_invariants(t), (std::vector<std::uint64_t>{3}));
    EXPECT_EQ(complement_count(t, p_core(t, 2)), 4U);
}

TEST(Invariants, AbelianInvariantsOfProducts) {
    // Z2 x Z4 acting on disjoint points.
    const auto g = FiniteGroup<Permutation>::closure({cyc(6, "(12)"), cyc(6, "(3456)")});
    EXPECT_EQ(abelian_invariants(g.table()), (std::vector<std::uint64_t>{2, 4}));
    EXPECT_EQ(center(g.table()).order(), 8U);
}

TEST(Subgroups, ClosureAndBoundedOrder) {
    const auto g = sym4();
    const std::vector<CayleyTable::Index> gens{g.table().generator_element(0)};
    EXPECT_EQ(subgroup_closure(g.table(), gens).order(), 2U);
    const std::vector<CayleyTable::Index> both{g.table().generator_element(0), g.table().generator_element(1)};
    EXPECT_EQ(bounded_closure_order(g.table(), both, 100), 24U);
    EXPECT_EQ(bounded_closure_order(g.table(), both, 10), 11U);
}

TEST(Subgroups, NormalClosureOfTransposition) {
    const auto g = sym4();
    const std::vector<CayleyTable::Index> seed{g.table().generator_element(0)};
    EXPECT_EQ(normal_closure(g.table(), seed).order(), 24U);
}

TEST(Subgroups, LeftCosetLabels) {
    const auto g = sym4();
    const auto h = FiniteGroup<Permutation>::closure({cyc(4, "(12)"), cyc(4, "(123)")});
    std::vector<CayleyTable::Index> members;
    for (const auto &e : h.elements()) members.push_back(*g.find(e));
    const auto labels = left_coset_labels(g.table(), Subgroup(g.order(), members));
    EXPECT_EQ(*std::max_element(labels.begin(), labels.end()), 3U);
    EXPECT_EQ(labels[0], 0U);
}

TEST(Battery, EqualGroupsAreNotDistinguished) {
    const auto a = sym4();
    const auto b = FiniteGroup<Permutation>::closure({cyc(4, "(1234)"), cyc(4, "(12)")});
    const auto v = invariant_battery(a, b);
    EXPECT_FALSE(v.distinguished);
    EXPECT_TRUE(v.stage.empty());
    EXPECT_EQ(v.stages.size(), 7U);
}

TEST(Battery, StopsAtFirstDifference) {
    // Z2 x A4 has the same order as S4 but a different order histogram.
    const auto z2a4 = FiniteGroup<Permutation>::closure({cyc(6, "(123)"), cyc(6, "(12)(34)"), cyc(6, "(56)")});
    ASSERT_EQ(z2a4.order(), 24U);
    const auto v = invariant_battery(sym4(), z2a4);
    EXPECT_TRUE(v.distinguished);
    EXPECT_EQ(v.stages.size(), 2U);
    EXPECT_EQ(v.stage, v.stages.back().name);
    EXPECT_NE(v.stages.back().first, v.stages.back().second);
}

TEST(CosetAction, PrimitiveAndImprimitive) {
    const auto g = sym4();
    const auto stab = FiniteGroup<Permutation>::closure({cyc(4, "(12)"), cyc(4, "(123)")});
    const auto on_points = coset_action(g, stab);
    EXPECT_EQ(on_points.generators().front().degree(), 4U);
    EXPECT_EQ(on_points.order(), 24U);
    EXPECT_TRUE(is_primitive(on_points).primitive);

    const auto klein = FiniteGroup<Permutation>::closure({cyc(4, "(12)(34)"), cyc(4, "(13)(24)")});
    const auto regular = coset_action(g, klein);
    EXPECT_EQ(regular.generators().front().degree(), 6U);

    const auto dihedral = std::vector<Permutation>{cyc(4, "(1234)"), cyc(4, "(13)")};
    const auto p = is_primitive(dihedral);
    EXPECT_FALSE(p.primitive);
    EXPECT_EQ(p.block.size(), 2U);

    EXPECT_THROW(is_primitive(std::vector<Permutation>{cyc(4, "(12)")}), Error);
}

TEST(CosetAction, RejectsNonSubgroup) {
    const auto a = alt4();
    const auto h = FiniteGroup<Permutation>::closure({cyc(4, "(12)")});
    try {
        coset_action(a, h);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotASubgroup);
    }
}

TEST(GeneratorMap, IsomorphismHomomorphismInconsistent) {
    const auto g = sym4();
    const auto same = map_by_generators(g, std::vector<Permutation>{cyc(4, "(12)"), cyc(4, "(1234)")});
    EXPECT_EQ(same.status, MapStatus::ConsistentIsomorphism);
    EXPECT_EQ(same.image_size, 24U);

    const auto sign = map_by_generators(g, std::vector<Permutation>{cyc(2, "(12)"), cyc(2, "(12)")});
    EXPECT_EQ(sign.status, MapStatus::ConsistentHomomorphism);
    EXPECT_EQ(sign.image_size, 2U);

    const auto bad = map_by_generators(g, std::vector<Permutation>{cyc(2, "(1)(2)"), cyc(2, "(12)")});
    EXPECT_EQ(bad.status, MapStatus::Inconsistent);
    ASSERT_TRUE(bad.witness.has_value());
    EXPECT_EQ(to_string(bad.status), "inconsistent");
}

TEST(SetStabilizer, SinglePairStatesOfOneBit) {
    const std::vector<std::vector<int>> pure{{0, 2}, {1, 3}, {1, 2}, {0, 3}, {0, 1}, {2, 3}};
    const auto s = set_stabilizer(4, pure);
    EXPECT_EQ(s.order(), 24U);
    EXPECT_EQ(s.key_set(), sym4().key_set());
}

TEST(SetStabilizer, SquareEdges) {
    // Edges of a 4-cycle are preserved by the dihedral group of order 8.
    const std::vector<std::vector<int>> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    EXPECT_EQ(set_stabilizer(4, edges).order(), 8U);
    EXPECT_EQ(set_stabilizer_elements(4, std::vector<std::uint64_t>{0b0011, 0b0110, 0b1100, 0b1001}).size(), 8U);
}

TEST(Histogram, Format) { EXPECT_EQ(format_histogram({{1, 1}, {2, 9}}), "{1:1, 2:9}"); }
