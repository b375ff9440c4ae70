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

#include <set>

#include "toybit/epistemic.hpp"

using namespace toybit;

namespace {

ErrorKind error_of(int n, std::initializer_list<int> cells) {
    try {
        make_epistemic(n, cells);
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an error";
    return ErrorKind::ParseError;
}

}  // namespace

TEST(Epistemic, SingleBitPureStates) {
    const auto states = pure_states(1);
    ASSERT_EQ(states.size(), 6U);
    std::set<CellMask> masks;
    for (const auto &s : states) {
        EXPECT_EQ(s.size(), 2);
        EXPECT_TRUE(s.is_pure());
        masks.insert(s.mask());
    }
    EXPECT_EQ(masks.size(), 6U);
    // Antipodes are complements, stored adjacently.
    for (std::size_t k = 0; k < 6; k += 2) EXPECT_EQ(states[k].mask() ^ states[k + 1].mask(), 0xF);
}

TEST(Epistemic, TwoBitPureStatesSplitIntoProductsAndPatterns) {
    const auto states = pure_states(2);
    ASSERT_EQ(states.size(), 60U);
    int products = 0;
    int patterns = 0;
    for (const auto &s : states) {
        EXPECT_EQ(s.size(), 4);
        products += is_product_support(s.mask());
        patterns += is_permutation_pattern(s.mask());
        EXPECT_NE(is_product_support(s.mask()), is_permutation_pattern(s.mask()));
    }
    EXPECT_EQ(products, 36);
    EXPECT_EQ(patterns, 24);
}

TEST(Epistemic, MixedCatalog) {
    const auto mixed = mixed_catalog();
    EXPECT_EQ(mixed.size(), 31U);
    int eights = 0;
    for (const auto &s : mixed) {
        EXPECT_FALSE(s.is_pure());
        EXPECT_TRUE(is_valid_support(2, s.mask()));
        eights += s.size() == 8;
    }
    EXPECT_EQ(eights, 30);
}

TEST(Epistemic, ValidationRules) {
    EXPECT_EQ(error_of(1, {0}), ErrorKind::KnowledgeBalanceViolation);
    EXPECT_EQ(error_of(1, {0, 1, 2}), ErrorKind::InvalidSupport);
    EXPECT_EQ(error_of(1, {4}), ErrorKind::InvalidSupport);
    EXPECT_EQ(error_of(2, {0, 1}), ErrorKind::KnowledgeBalanceViolation);
    // Four cells in one row: the first bit is known exactly.
    EXPECT_EQ(error_of(2, {0, 1, 2, 3}), ErrorKind::KnowledgeBalanceViolation);
    // Balanced marginals but not a catalog pattern.
    EXPECT_EQ(error_of(2, {0, 1, 4, 6}), ErrorKind::NotInCatalog);
    EXPECT_NO_THROW(make_epistemic(1, {0, 1, 2, 3}));
    EXPECT_NO_THROW(make_epistemic(2, {0, 5, 10, 15}));
}

TEST(Epistemic, TensorBuildsProductGrid) {
    const auto a = make_epistemic(1, {0, 1});
    const auto b = make_epistemic(1, {2, 3});
    const auto t = tensor(a, b);
    EXPECT_EQ(t.cells(), (std::vector<int>{2, 3, 6, 7}));
    EXPECT_TRUE(is_product_support(t.mask()));
    EXPECT_THROW(tensor(t, a), Error);
}

TEST(Epistemic, OutcomeProbabilityCountsOverlap) {
    const auto e12 = make_epistemic(1, {0, 1});
    EXPECT_EQ(outcome_probability(make_epistemic(1, {0, 2}), e12), Rational(1, 2));
    EXPECT_EQ(outcome_probability(make_epistemic(1, {0, 1}), e12), Rational(1));
    EXPECT_EQ(outcome_probability(make_epistemic(1, {2, 3}), e12), Rational(0));
    const auto sigma0 = make_epistemic(2, {0, 5, 10, 15});
    EXPECT_EQ(outcome_probability(make_epistemic(2, {0, 1, 4, 5}), sigma0), Rational(1, 2));
    EXPECT_THROW(outcome_probability(e12, sigma0), Error);
}

TEST(Epistemic, PerfectCorrelationIsExactlyThePatterns) {
    int count = 0;
    for (const auto &s : pure_states(2)) count += is_perfectly_correlated(s);
    for (const auto &s : mixed_catalog()) EXPECT_FALSE(is_perfectly_correlated(s));
    EXPECT_EQ(count, 24);
}

TEST(Epistemic, RenderGrid) {
    EXPECT_EQ(render_grid(make_epistemic(1, {0, 1})), "##..\n");
    EXPECT_EQ(render_grid(make_epistemic(2, {0, 5, 10, 15})), "#...\n.#..\n..#.\n...#\n");
}
