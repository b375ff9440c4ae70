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

#include "toybit/json_io.hpp"
#include "toybit/toy_ops.hpp"

using namespace toybit;

TEST(JsonIo, StateRoundTrip) {
    const auto s = make_epistemic(2, {0, 5, 10, 15});
    EXPECT_EQ(to_json(s).dump(), R"({"n":2,"support":[0,5,10,15]})");
    EXPECT_EQ(state_from_json(to_json(s)), s);
    EXPECT_EQ(parse_state(R"({"n":1,"support":[0,1]})"), make_epistemic(1, {0, 1}));
}

TEST(JsonIo, PartitionRoundTrip) {
    const auto p = enumerate_partitions().front();
    EXPECT_EQ(partition_from_json(to_json(p)), p);
}

TEST(JsonIo, MatrixAndPermutationRoundTrip) {
    EXPECT_EQ(matrix_from_json(to_json(h_tilde())), h_tilde());
    const auto p = Permutation::from_cycles(5, "(135)");
    EXPECT_EQ(permutation_from_json(to_json(p)), p);
}

TEST(JsonIo, ErrorsCarryKinds) {
    auto kind_of = [](auto f) {
        try {
            f();
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::CapExceeded;
    };
    EXPECT_EQ(kind_of([] { parse_state("{not json"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_state(R"({"n":1})"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_state(R"({"n":1,"support":[0]})"); }), ErrorKind::KnowledgeBalanceViolation);
    EXPECT_EQ(kind_of([] { parse_partition(R"({"cells":[{"n":1,"support":[0,1]}]})"); }), ErrorKind::InvalidPartition);
    EXPECT_EQ(kind_of([] { permutation_from_json(Json::parse(R"({"images":[0,0]})")); }), ErrorKind::ParseError);
}
