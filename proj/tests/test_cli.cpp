// Copyright 2026 The cqec Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cqec/cli.hpp"
#include "cqec/code_file.hpp"
#include "cqec/composite_builder.hpp"

namespace cqec {
namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args) {
    args.insert(args.begin(), "cqec");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line) return true;
    return false;
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("cqec_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
        write_code_file(path("five_qubit.code"), codes::five_qubit());
        write_code_file(path("five_qutrit.code"), codes::five_qudit(3));
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::filesystem::path dir_;
};

TEST_F(CliTest, LdiWritesIntegerCode) {
    const Invocation r = run({"ldi", path("five_qubit.code"), "-o", path("five_ldi.code")});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_TRUE(has_line(r.out, "B=2"));
    EXPECT_TRUE(has_line(r.out, "is_ldi=true"));
    const StabilizerCode written = read_code_file(path("five_ldi.code"));
    EXPECT_TRUE(written.modulus().is_unbounded());
    EXPECT_EQ(written.origin_prime(), 2);
}

TEST_F(CliTest, MixThenDistance) {
    Invocation r = run({"--format", "kv", "mix", "--Q", "6", path("five_qubit.code") + "@p2", path("five_qutrit.code") + "@p3",
                 "-o", path("mixed.code")});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_TRUE(has_line(r.out, "K=6"));
    EXPECT_TRUE(has_line(r.out, "k=1"));

    r = run({"distance", "--Q", "6", "--max-weight", "3", path("mixed.code")});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_TRUE(has_line(r.out, "d=3"));

    r = run({"distance", "--max-weight", "2", "--jobs", "2", path("mixed.code")});
    EXPECT_TRUE(has_line(r.out, "d=>2"));
}

TEST_F(CliTest, InfoMatchesLibrary) {
    const Invocation r = run({"--format", "kv", "info", path("five_qubit.code")});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_TRUE(has_line(r.out, "K=2"));
    EXPECT_TRUE(has_line(r.out, "generator_orders=2,2,2,2"));
    EXPECT_TRUE(has_line(r.out, "logicals=2"));
}

TEST_F(CliTest, TransformWithoutOutputPrintsCode) {
    const Invocation r = run({"canon", path("five_qubit.code")});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    const StabilizerCode canon = parse_code_file(r.out);
    EXPECT_EQ(canon.num_generators(), 4);
    EXPECT_TRUE(has_line(r.err, "rank=4"));
}

TEST_F(CliTest, InstantiateScaleEmbedCheckCond) {
    ASSERT_EQ(run({"ldi", path("five_qubit.code"), "-o", path("ldi.code")}).code, 0);
    Invocation r = run({"instantiate", "--Q", "6", path("ldi.code"), "-o", path("six.code")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(read_code_file(path("six.code")).modulus(), Modulus::finite(6));

    r = run({"scale", "--m", "3", "--Q", "2", path("ldi.code"), "-o", path("scaled.code")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(read_code_file(path("scaled.code")).modulus(), Modulus::finite(6));

    r = run({"embed", "--n", "7", "--offset", "2", path("five_qubit.code"), "-o", path("embedded.code")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(read_code_file(path("embedded.code")).n(), 7);

    r = run({"check-cond", "--Q", "6", path("ldi.code")});
    EXPECT_TRUE(has_line(r.out, "condition=CondI"));
    r = run({"check-cond", "--Q", "77", "--p-star", "6", path("ldi.code")});
    EXPECT_TRUE(has_line(r.out, "condition=CondII"));
}

TEST_F(CliTest, ClassifyWithLifts) {
    {
        std::ofstream f(path("zz.code"));
        f << "n=3 q=Z origin=2\n0 0 0 1 1 0\n0 0 0 0 1 1\n";
    }
    Invocation r = run({"classify", "--Q", "2", "--error", "1 1 1 0 0 0", path("zz.code")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "class=Artifact"));
    EXPECT_TRUE(has_line(r.out, "integer_syndrome=-2 -2"));

    {
        std::ofstream f(path("xx.code"));
        f << "n=2 q=Z origin=2\n1 1 0 0\n";
    }
    r = run({"classify", "--Q", "4", "--lift", "symmetric", "--error", "0 0 1 3", path("xx.code")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(has_line(r.out, "class=Unavoidable"));
    EXPECT_TRUE(has_line(r.out, "lift=0 0 1 -1"));

    r = run({"classify", "--Q", "4", "--error", "0 0 1 3", path("xx.code")});
    EXPECT_TRUE(has_line(r.out, "class=Artifact"));

    r = run({"classify", "--Q", "4", "--error", "0 0 1", path("xx.code")});
    EXPECT_EQ(r.code, cli::kExitDomainError);
}

TEST_F(CliTest, ValidateReportsViolations) {
    {
        std::ofstream f(path("bad.code"));
        f << "n=1 q=2\n1 0\n0 1\n";
    }
    const Invocation r = run({"--format", "kv", "validate", path("bad.code")});
    EXPECT_EQ(r.code, cli::kExitDomainError);
    EXPECT_TRUE(has_line(r.out, "valid=false"));
    EXPECT_TRUE(has_line(r.out, "violation=1,2:1"));
    EXPECT_EQ(run({"validate", path("five_qubit.code")}).code, cli::kExitOk);
}

TEST_F(CliTest, NoValidateLoadsInvalidCodes) {
    {
        std::ofstream f(path("bad.code"));
        f << "n=1 q=2\n1 0\n0 1\n";
    }
    EXPECT_EQ(run({"embed", "--n", "2", "--offset", "0", path("bad.code")}).code, cli::kExitDomainError);
    EXPECT_EQ(run({"--no-validate", "embed", "--n", "2", "--offset", "0", path("bad.code")}).code, cli::kExitOk);
}

TEST_F(CliTest, ExitCodes) {
    EXPECT_EQ(run({}).code, cli::kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
    EXPECT_EQ(run({"distance", path("five_qubit.code")}).code, cli::kExitUsage);
    EXPECT_EQ(run({"--format", "xml", "info", path("five_qubit.code")}).code, cli::kExitUsage);
    EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
    EXPECT_EQ(run({"info", path("missing.code")}).code, cli::kExitDomainError);
    EXPECT_EQ(run({"mix", "--Q", "6", path("five_qubit.code")}).code, cli::kExitDomainError);
    EXPECT_EQ(run({"mix", "--Q", "4", path("five_qubit.code") + "@p2"}).code, cli::kExitDomainError);
}

TEST_F(CliTest, KnownCodes) {
    const Invocation r = run({"known", "five_qudit:5"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(parse_code_file(r.out).modulus(), Modulus::finite(5));
}

}  // namespace
}  // namespace cqec
