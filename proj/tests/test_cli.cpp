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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "toybit/json_io.hpp"

using toybit::Json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = toybit::cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

const char *kSigma0 = R"({"n":2,"support":[0,5,10,15]})";
const char *kE12 = R"({"n":1,"support":[0,1]})";
const char *kXBasis = R"({"cells":[{"n":1,"support":[0,2]},{"n":1,"support":[1,3]}]})";
const char *kZBasis = R"({"cells":[{"n":1,"support":[0,1]},{"n":1,"support":[2,3]}]})";

}  // namespace

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"verify", "--bogus"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--group", "nosuch"}).code, 2);
    const auto r = run({"verify", "--claim", "nosuch"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("nosuch"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
    const auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, VerifyOneClaimAsJson) {
    const auto r = run({"verify", "--claim", "partitions", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    ASSERT_EQ(j.size(), 1U);
    EXPECT_EQ(j[0]["claim"], "partitions");
    EXPECT_EQ(j[0]["status"], "verified");
    EXPECT_EQ(j[0]["expected"]["value"]["count"], 105);
}

TEST(Cli, VerifyAllWritesFile) {
    const auto path = (std::filesystem::temp_directory_path() / "toybit_verify.json").string();
    const auto r = run({"verify", "--all", "--format", "json", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(path);
    const auto j = Json::parse(in);
    EXPECT_EQ(j.size(), 9U);
    for (const auto &rep : j) EXPECT_EQ(rep["status"], "verified") << rep.dump();
    std::filesystem::remove(path);
}

TEST(Cli, EnumerateGroups) {
    const auto r = run({"enumerate", "--group", "s4", "--histogram", "--classes"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["order"], 24);
    EXPECT_EQ(j["element_order_histogram"]["2"], 9);
    EXPECT_EQ(j["class_sizes"], Json::parse("[1,3,6,6,8]"));
    EXPECT_EQ(j["generators"].size(), 2U);
}

TEST(Cli, EnumerateTg2ToFile) {
    const auto path = (std::filesystem::temp_directory_path() / "toybit_tg2.json").string();
    ASSERT_EQ(run({"enumerate", "--group", "tg2", "--out", path}).code, 0);
    std::ifstream in(path);
    EXPECT_EQ(Json::parse(in)["order"], 23040);
    std::filesystem::remove(path);
}

TEST(Cli, MeasureIsDeterministic) {
    const std::vector<std::string> args{"measure", "--state", kE12, "--partition", kXBasis, "--shots", "10000", "--seed", "9"};
    const auto a = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, run(args).out);
    EXPECT_NE(a.out.find("1/2"), std::string::npos);
    EXPECT_NE(a.out.find("repeat mismatches 0"), std::string::npos);
}

TEST(Cli, MeasureCertainOutcome) {
    const auto r = run({"measure", "--state", kE12, "--partition", kZBasis, "--shots", "500", "--seed", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("1/1      1.0000"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("0/1      0.0000"), std::string::npos) << r.out;
}

TEST(Cli, MeasureSeedFromEnvironment) {
    const std::vector<std::string> args{"measure", "--state", kE12, "--partition", kXBasis, "--shots", "1000"};
    ::setenv("TOYBIT_SEED", "123", 1);
    const auto env = run(args);
    ::unsetenv("TOYBIT_SEED");
    auto explicit_args = args;
    explicit_args.insert(explicit_args.end(), {"--seed", "123"});
    EXPECT_EQ(env.out, run(explicit_args).out);
}

TEST(Cli, MeasureRejectsBadInput) {
    EXPECT_EQ(run({"measure", "--state", R"({"n":1,"support":[0]})", "--partition", kXBasis}).code, 2);
    EXPECT_EQ(run({"measure", "--state", kE12, "--partition", R"({"cells":[]})"}).code, 2);
    EXPECT_EQ(run({"measure", "--state", kSigma0, "--partition", kXBasis}).code, 2);
}

TEST(Cli, Correlate) {
    EXPECT_EQ(run({"correlate", "--state", kSigma0}).out, "perfectly correlated; witness: H̃⊗I\n");
    EXPECT_EQ(run({"correlate", "--state", R"({"n":2,"support":[0,2,8,10]})"}).out, "not perfectly correlated\n");
    EXPECT_EQ(run({"correlate", "--state", R"({"n":2,"support":[0,1,2,3]})"}).code, 2);
    EXPECT_EQ(run({"correlate", "--state", R"({"n":2,"support":[0,1,2,3,4,5,6,7]})"}).out, "not perfectly correlated\n");
    EXPECT_EQ(run({"correlate", "--state", R"({"n":2,"support":[0,1,4,5,10,11,14,15]})"}).out,
              "not perfectly correlated\n");
}

TEST(Cli, Euler) {
    const auto r = run({"euler", "--perm", "(123)(4)"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("theta π  phi -π/2  psi -π/2"), std::string::npos) << r.out;
    EXPECT_EQ(run({"euler", "--perm", "(12)"}).code, 2);
    EXPECT_EQ(run({"euler", "--perm", "(19)"}).code, 2);
}

TEST(Cli, ExportFormats) {
    const auto states = run({"export", "--what", "states", "--format", "csv"});
    ASSERT_EQ(states.code, 0);
    EXPECT_EQ(std::count(states.out.begin(), states.out.end(), '\n'), 1 + 6 + 60 + 31);

    const auto parts = Json::parse(run({"export", "--what", "partitions"}).out);
    EXPECT_EQ(parts.size(), 105U);

    const auto dot = run({"export", "--what", "cayley", "--group", "s4", "--format", "dot"});
    ASSERT_EQ(dot.code, 0);
    EXPECT_EQ(dot.out.rfind("digraph", 0), 0U);
    EXPECT_EQ(std::count(dot.out.begin(), dot.out.end(), '>'), 48);

    const auto cayley = Json::parse(run({"export", "--what", "cayley", "--group", "a4", "--format", "json"}).out);
    EXPECT_EQ(cayley["steps"].size(), 12U);

    EXPECT_EQ(run({"export", "--what", "cayley", "--format", "csv"}).code, 2);
    EXPECT_EQ(run({"export", "--what", "states", "--format", "dot"}).code, 2);
}
