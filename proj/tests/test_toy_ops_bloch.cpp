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

#include "toybit/bloch.hpp"
#include "toybit/clifford.hpp"
#include "toybit/toy_ops.hpp"

using namespace toybit;

TEST(ToyOps, NamedGroupOrders) {
    EXPECT_EQ(s4_group().order(), 24U);
    EXPECT_EQ(a4_group().order(), 12U);
    EXPECT_EQ(tg1_group().order(), 48U);
}

TEST(ToyOps, HadamardAnalogue) {
    const auto h = h_tilde();
    EXPECT_TRUE(h.is_orthogonal());
    EXPECT_FALSE(h.is_permutation_matrix());
    EXPECT_EQ(h * h, ScaledMatrix::identity(4));
    // e12 -> e13: the z axis goes to the x axis.
    EXPECT_EQ(apply_operation(h, make_epistemic(1, {0, 1})), make_epistemic(1, {0, 2}));
}

TEST(ToyOps, PhaseAnalogueHasOrderFourOnStates) {
    const auto p = six_state_action(sqrt_z_tilde());
    EXPECT_FALSE((p * p).is_identity());
    EXPECT_TRUE((p * p * p * p).is_identity());
    EXPECT_EQ(p[4], 4U);  // z axis fixed
    EXPECT_EQ(p[5], 5U);
}

TEST(ToyOps, TranspositionSwapsXAndY) {
    EXPECT_EQ(six_state_action(toy_permutation("(12)")).to_cycles(), "(13)(24)(5)(6)");
}

TEST(ToyOps, ApplyRejectsInvalidImages) {
    const auto h_i = h_tilde().kron(ScaledMatrix::identity(4));
    EXPECT_FALSE(apply_operation(h_i, make_epistemic(2, {0, 5, 10, 15})).has_value());
    EXPECT_TRUE(apply_operation(h_i, make_epistemic(2, {0, 1, 4, 5})).has_value());
    EXPECT_THROW(apply_operation(h_tilde(), make_epistemic(2, {0, 5, 10, 15})), Error);
}

TEST(ToyOps, SwapExchangesSubsystems) {
    const auto swap = toy_swap();
    EXPECT_EQ(swap * swap, ScaledMatrix::identity(16));
    const auto a = make_epistemic(1, {0, 1});
    const auto b = make_epistemic(1, {2, 3});
    EXPECT_EQ(apply_operation(swap, tensor(a, b)), tensor(b, a));
    const auto sigma0 = make_epistemic(2, {0, 5, 10, 15});
    EXPECT_EQ(apply_operation(swap, sigma0), sigma0);
}

TEST(ToyOps, DisplayedImagesAreOrthogonal) {
    for (const auto &m : {printed_conj_image(), cnot_image(), h_i_image()}) {
        EXPECT_EQ(m.dim(), 16);
        EXPECT_TRUE(m.is_orthogonal());
    }
    EXPECT_EQ(cnot_image() * cnot_image(), ScaledMatrix::identity(16));
}

TEST(ToyOps, SixStateActionRejectsNonPermutingMaps) {
    const ScaledMatrix squash(4, {1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0}, 0);
    EXPECT_THROW(six_state_action(squash), Error);
}

TEST(Bloch, TranspositionIsAReflection) {
    const auto r = bloch_action(toy_permutation("(12)(3)(4)"));
    EXPECT_EQ(r, SignedPerm3({0, 1, 0, 1, 0, 0, 0, 0, 1}));
    EXPECT_EQ(r.det(), -1);
    EXPECT_THROW(euler_decompose(r), Error);
}

TEST(Bloch, QuantumAndToyHadamardAgree) {
    EXPECT_EQ(bloch_action(h_tilde()), bloch_action(gates::h()));
    EXPECT_EQ(bloch_action(sqrt_z_tilde()), bloch_action(gates::sqrt_z()));
}

TEST(Bloch, AntipodeViolationIsReported) {
    // Maps state 0 to 2 and 1 to 1: antipodes 0,1 land on non-antipodes.
    const Permutation p({2, 1, 0, 3, 4, 5});
    try {
        bloch_action(p);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotAxisPreserving);
    }
}

TEST(Euler, PublishedAngles) {
    EXPECT_EQ(euler_decompose(bloch_action(toy_permutation("(123)(4)"))), (EulerAngles{2, -1, -1}));
    EXPECT_EQ(euler_decompose(bloch_action(h_tilde())), (EulerAngles{1, 1, 1}));
}

TEST(Euler, RoundTripOverAllRotations) {
    const auto s4 = s4_group();
    int rotations = 0;
    for (const auto &p : s4.elements()) {
        const auto r = bloch_action(p);
        if (r.det() != 1) continue;
        ++rotations;
        EXPECT_EQ(recompose(euler_decompose(r)), r);
    }
    EXPECT_EQ(rotations, 12);
    const auto tg1 = tg1_group();
    rotations = 0;
    for (const auto &m : tg1.elements()) {
        const auto r = bloch_action(m);
        if (r.det() != 1) continue;
        ++rotations;
        EXPECT_EQ(recompose(euler_decompose(r)), r);
    }
    EXPECT_EQ(rotations, 24);
}

TEST(Euler, QuarterTurnsCompose) {
    EXPECT_EQ(rotation_x(4), SignedPerm3());
    EXPECT_EQ(rotation_z(1) * rotation_z(3), SignedPerm3());
    EXPECT_EQ(rotation_x(1).transpose(), rotation_x(-1));
}
