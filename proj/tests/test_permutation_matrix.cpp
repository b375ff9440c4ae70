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

#include "toybit/permutation.hpp"
#include "toybit/scaled_matrix.hpp"

using namespace toybit;

TEST(Permutation, CyclesRoundTrip) {
    const auto p = Permutation::from_cycles(4, "(123)(4)");
    EXPECT_EQ(p[0], 1U);
    EXPECT_EQ(p[1], 2U);
    EXPECT_EQ(p[2], 0U);
    EXPECT_EQ(p[3], 3U);
    EXPECT_EQ(p.to_cycles(), "(123)(4)");
    EXPECT_EQ(Permutation::from_cycles(4, "(12)"), Permutation::from_cycles(4, "(12)(3)(4)"));
}

TEST(Permutation, CommaSeparatedCyclesForLargeDegree) {
    const auto p = Permutation::from_cycles(16, "(3,11,16,7)(13,14)");
    EXPECT_EQ(p[2], 10U);
    EXPECT_EQ(p[15], 6U);
    EXPECT_EQ(Permutation::from_cycles(16, p.to_cycles()), p);
}

TEST(Permutation, RejectsMalformedInput) {
    EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation::from_cycles(4, "(15)"), std::invalid_argument);
    EXPECT_THROW(Permutation::from_cycles(4, "(121)"), std::invalid_argument);
    EXPECT_THROW(Permutation::from_cycles(4, "(12"), std::invalid_argument);
    EXPECT_THROW(Permutation::from_cycles(4, "12"), std::invalid_argument);
}

TEST(Permutation, CompositionAppliesRightFactorFirst) {
    const auto a = Permutation::from_cycles(3, "(12)");
    const auto b = Permutation::from_cycles(3, "(23)");
    // (a*b)(1) = a(b(1)) = a(1) = 2 in 1-based terms.
    EXPECT_EQ((a * b)[0], 1U);
    EXPECT_EQ((a * b).to_cycles(), "(123)");
    EXPECT_TRUE((a * a.inverse()).is_identity());
}

TEST(ScaledMatrix, NormalizesCommonPowersOfTwo) {
    const ScaledMatrix m(2, {2, 0, 0, 2}, 1);
    EXPECT_EQ(m, ScaledMatrix::identity(2));
    EXPECT_EQ(m.denom_exp(), 0);
    EXPECT_EQ(ScaledMatrix(2, {1, 1, 1, -1}, 1).at(0, 0), Rational(1, 2));
}

TEST(ScaledMatrix, PermutationMatrixColumnConvention) {
    const auto p = Permutation::from_cycles(3, "(123)");
    const auto m = ScaledMatrix::from_permutation(p);
    EXPECT_EQ(m.numerator(1, 0), 1);  // column 0 carries e_{p(0)} = e_1
    EXPECT_TRUE(m.is_permutation_matrix());
    EXPECT_EQ(m.as_permutation(), p);
    EXPECT_EQ(ScaledMatrix::from_permutation(p * p), m * m);
}

TEST(ScaledMatrix, KronAndOrthogonality) {
    const ScaledMatrix h(2, {1, 1, 1, -1}, 1);  // not orthogonal: rows have norm 1/2
    EXPECT_FALSE(h.is_orthogonal());
    const ScaledMatrix r(4, {1, 1, 1, -1, 1, -1, 1, 1, 1, 1, -1, 1, -1, 1, 1, 1}, 1);
    EXPECT_TRUE(r.is_orthogonal());
    const auto k = r.kron(ScaledMatrix::identity(4));
    EXPECT_EQ(k.dim(), 16);
    EXPECT_TRUE(k.is_orthogonal());
    EXPECT_EQ(k * k.transpose(), ScaledMatrix::identity(16));
}

TEST(ScaledMatrix, ApplyReportsFractionalImages) {
    const ScaledMatrix r(4, {1, 1, 1, -1, 1, -1, 1, 1, 1, 1, -1, 1, -1, 1, 1, 1}, 1);
    EXPECT_EQ(r.apply(std::vector<std::int64_t>{1, 1, 0, 0}), (std::vector<std::int64_t>{1, 0, 1, 0}));
    EXPECT_FALSE(r.apply(std::vector<std::int64_t>{1, 0, 0, 0}).has_value());
}

TEST(ScaledMatrix, KeysSeparateDistinctMatrices) {
    EXPECT_NE(ScaledMatrix::identity(4).key(), ScaledMatrix::from_permutation(Permutation::from_cycles(4, "(12)")).key());
    EXPECT_EQ(ScaledMatrix(2, {2, 0, 0, 2}, 1).key(), ScaledMatrix::identity(2).key());
}
