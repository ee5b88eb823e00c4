// Copyright 2026 The qstab Authors
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "qstab");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::stringstream out;
    std::stringstream err;
    int status = qstab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

class cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qstab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        write("l5.code.json",
              R"({"field": {"p": 2, "r": 1}, "n": 5, "construction": "circulant", "first_row": [0, 0, 1, 1, 0]})");
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    void write(const std::string &name, const std::string &text) const {
        std::ofstream(path(name)) << text;
    }
    std::string read(const std::string &name) const {
        std::ifstream in(path(name));
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    fs::path dir_;
};

bool has_line(const std::string &text, const std::string &line) {
    std::stringstream ss(text);
    std::string l;
    while (std::getline(ss, l)) {
        if (l == line) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_F(cli, report_and_build) {
    Result r = invoke({"report", "--code", path("l5.code.json")});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "n=5\nk=1\n");
    Result b = invoke({"build", "--spec", path("l5.code.json"), "--out", path("norm.json")});
    EXPECT_EQ(b.status, 0);
    EXPECT_EQ(invoke({"report", "--code", path("norm.json")}).out, "n=5\nk=1\n");
}

TEST_F(cli, distance) {
    Result r = invoke({"distance", "--code", path("l5.code.json")});
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(has_line(r.out, "d=3"));
    EXPECT_TRUE(has_line(r.out, "pure=true"));
    EXPECT_TRUE(has_line(r.out, "enumerated=64"));
    Result w = invoke({"distance", "--code", path("l5.code.json"), "--workers", "3"});
    EXPECT_TRUE(has_line(w.out, "witness_a=1,0,0,1,1"));
    EXPECT_TRUE(has_line(r.out, "witness_a=1,0,0,1,1"));
    Result p = invoke({"distance", "--code", path("l5.code.json"), "--pure"});
    EXPECT_TRUE(has_line(p.out, "d=3"));
}

TEST_F(cli, distance_early_exit) {
    Result ok = invoke({"distance", "--code", path("l5.code.json"), "--early-exit", "2"});
    EXPECT_EQ(ok.status, 0);
    Result hit = invoke({"distance", "--code", path("l5.code.json"), "--early-exit", "3"});
    EXPECT_EQ(hit.status, 1);
    EXPECT_TRUE(has_line(hit.out, "status=early_exit"));
    EXPECT_NE(hit.err.find("error="), std::string::npos);
}

TEST_F(cli, distance_budget) {
    Result r = invoke({"distance", "--code", path("l5.code.json"), "--budget", "10"});
    EXPECT_EQ(r.status, 3);
    EXPECT_TRUE(has_line(r.err, "error=BudgetExceeded"));
}

TEST_F(cli, verify_kl) {
    Result pass = invoke({"verify-kl", "--code", path("l5.code.json"), "--t", "1"});
    EXPECT_EQ(pass.status, 0);
    EXPECT_TRUE(has_line(pass.out, "checked=106"));
    Result fail = invoke({"verify-kl", "--code", path("l5.code.json"), "--t", "2"});
    EXPECT_EQ(fail.status, 1);
    EXPECT_TRUE(has_line(fail.out, "passed=false"));
    EXPECT_NE(fail.out.find("witness_a="), std::string::npos);
    Result small = invoke({"verify-kl", "--code", path("l5.code.json"), "--t", "1", "--max-dim", "16"});
    EXPECT_EQ(small.status, 2);
}

TEST_F(cli, invalid_inputs) {
    write("odd.code.json", R"({"field": {"p": 2}, "n": 2, "construction": "matrixL", "L": [[1, 0], [0, 0]]})");
    Result odd = invoke({"build", "--spec", path("odd.code.json"), "--out", path("x.json")});
    EXPECT_EQ(odd.status, 2);
    EXPECT_TRUE(has_line(odd.err, "error=OddDiagonalInCharTwo"));
    EXPECT_EQ(invoke({"distance", "--code", path("l5.code.json"), "--bogus"}).status, 2);
    EXPECT_EQ(invoke({}).status, 2);
    EXPECT_EQ(invoke({"frobnicate"}).status, 2);
    EXPECT_EQ(invoke({"distance"}).status, 2);
    EXPECT_EQ(invoke({"report", "--code", path("missing.json")}).status, 2);
    EXPECT_EQ(invoke({"sample-good", "--n", "8", "--alpha", "0.25", "--seed", "1", "--max-tries", "5", "--out",
                      path("r.fqm")})
                  .status,
              2);
}

TEST_F(cli, codewords) {
    Result r = invoke({"codewords", "--code", path("l5.code.json"), "--out", path("cw.txt")});
    EXPECT_EQ(r.status, 0);
    std::string dump = read("cw.txt");
    EXPECT_EQ(dump.rfind("2 1 5 1 0,0,0,0,0\n0 0.25 0\n", 0), 0u);
    EXPECT_NE(dump.find("2 1 5 1 1,0,0,0,0\n"), std::string::npos);
}

TEST_F(cli, search_circulant) {
    Result r = invoke({"search-circulant", "--n", "5", "--p", "2", "--min-d", "3"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("first_row=0,0,1,1,0 d=3 pure=true elapsed_ms=", 0), 0u);
    Result f4 = invoke({"search-circulant", "--n", "5", "--p", "2", "--r", "2", "--modulus", "1,1,1", "--min-d", "3"});
    EXPECT_EQ(f4.status, 0);
    EXPECT_NE(f4.out.find("first_row=0,0,1,1,0 d=3"), std::string::npos);
    Result none = invoke({"search-circulant", "--n", "3", "--p", "2", "--min-d", "9"});
    EXPECT_EQ(none.status, 1);
    Result bad = invoke({"search-circulant", "--n", "5", "--p", "2", "--r", "2", "--modulus", "1,0,1", "--min-d", "3"});
    EXPECT_EQ(bad.status, 2);
    EXPECT_TRUE(has_line(bad.err, "error=ReducibleModulus"));
}

TEST_F(cli, sample_block_puncture_pipeline) {
    Result s = invoke(
        {"sample-good", "--n", "8", "--alpha", "1/4", "--seed", "1", "--max-tries", "100000", "--out", path("r.fqm")});
    ASSERT_EQ(s.status, 0);
    EXPECT_EQ(read("r.fqm.meta"), "seed=1\ntries=14\nalpha=1/4\n");
    Result b = invoke({"block-code", "--R", path("r.fqm"), "--alpha", "1/4", "--out", path("block.json")});
    ASSERT_EQ(b.status, 0);
    EXPECT_TRUE(has_line(b.out, "n=16"));
    Result d = invoke({"distance", "--code", path("block.json"), "--pure"});
    EXPECT_EQ(d.status, 0);
    EXPECT_TRUE(has_line(d.out, "d=3"));

    Result p = invoke({"puncture", "--code", path("l5.code.json"), "--coord", "0", "--out", path("p.json")});
    EXPECT_EQ(p.status, 0);
    EXPECT_EQ(invoke({"report", "--code", path("p.json")}).out, "n=4\nk=2\n");
    EXPECT_EQ(invoke({"puncture", "--code", path("l5.code.json"), "--coord", "5", "--out", path("q.json")}).status, 2);
}

TEST_F(cli, sample_failure_and_bad_R) {
    Result s = invoke(
        {"sample-good", "--n", "4", "--alpha", "9/10", "--seed", "1", "--max-tries", "10", "--out", path("r.fqm")});
    EXPECT_EQ(s.status, 1);
    EXPECT_FALSE(fs::exists(path("r.fqm")));
    write("id.fqm", "2 1 4 4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n");
    Result b = invoke({"block-code", "--R", path("id.fqm"), "--alpha", "1/2", "--out", path("b.json")});
    EXPECT_EQ(b.status, 1);
    EXPECT_TRUE(has_line(b.out, "violation=colLow"));
}
