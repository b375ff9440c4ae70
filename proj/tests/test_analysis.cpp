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

#include "toybit/analysis.hpp"
#include "toybit/toy_ops.hpp"

using namespace toybit;

namespace {

ClaimContext &shared() {
    static ClaimContext ctx;
    return ctx;
}

void expect_verified(const ClaimReport &r) {
    EXPECT_EQ(r.status, ClaimStatus::Verified) << r.to_json().dump();
    EXPECT_FALSE(r.provenance.empty());
    EXPECT_GE(r.ms, 0.0);
}

}  // namespace

TEST(Analysis, PartitionCount) { expect_verified(verify_partitions()); }
TEST(Analysis, AntipodalPermutations) { expect_verified(verify_lemma1(shared())); }
TEST(Analysis, AxisFlipCoordinates) { expect_verified(verify_lemma2()); }
TEST(Analysis, OneQubitSixPointActions) { expect_verified(verify_prop1(shared())); }
TEST(Analysis, CorrelationTestOnAllStates) { expect_verified(verify_theorem2(shared())); }
TEST(Analysis, HypercubePlanes) { expect_verified(verify_hypercube_geometry()); }

TEST(Analysis, ConjMatchIsNotAnOnticPermutation) {
    const auto r = verify_prop1(shared());
    EXPECT_EQ(r.witness["conj_six_state_action"], "(1)(2)(34)(5)(6)");
    // The toy element matching conj reflects y, which no ontic permutation does.
    EXPECT_EQ(r.witness["conj_toy_match"]["ontic_permutation"], false);
}

TEST(Analysis, HypercubeReportsRealTally) {
    const auto r = verify_hypercube_geometry();
    EXPECT_EQ(r.witness["real_affine_planes"], 44);
    EXPECT_FALSE(r.witness["real_failures_sample"].empty());
}

TEST(Analysis, ReportJsonShape) {
    const auto j = verify_partitions().to_json();
    EXPECT_EQ(j["claim"], "partitions");
    EXPECT_EQ(j["status"], "verified");
    EXPECT_EQ(j["expected"]["provenance"], "published");
    EXPECT_TRUE(j["expected"].contains("value"));
    EXPECT_TRUE(j["witness"].is_null());
    EXPECT_TRUE(j.contains("ms"));
}

TEST(Analysis, CorrelationDetector) {
    const auto sigma0 = make_epistemic(2, {0, 5, 10, 15});
    const auto w = detect_perfect_correlation(sigma0);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(*w, h_tilde());
    EXPECT_FALSE(detect_perfect_correlation(tensor(make_epistemic(1, {0, 1}), make_epistemic(1, {2, 3}))));
    const auto mixed = tensor(make_epistemic(1, {0, 1, 2, 3}), make_epistemic(1, {0, 1}));
    EXPECT_FALSE(detect_perfect_correlation(mixed));
    EXPECT_THROW(detect_perfect_correlation(make_epistemic(1, {0, 1})), Error);
}

TEST(Analysis, RunAllFilterAndUnknown) {
    const auto one = run_all({"lemma1"});
    ASSERT_EQ(one.size(), 1U);
    EXPECT_EQ(one[0].claim, "lemma1");
    try {
        run_all({"nosuch"});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownClaim);
    }
    EXPECT_EQ(claim_ids().size(), 9U);
}

TEST(Analysis, RunAllKeepsRegistryOrder) {
    const auto r = run_all({"hypercube", "partitions"});
    ASSERT_EQ(r.size(), 2U);
    EXPECT_EQ(r[0].claim, "partitions");
    EXPECT_EQ(r[1].claim, "hypercube");
}
