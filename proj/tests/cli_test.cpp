// Copyright 2026 The Orbikit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end runs of the orbikit binary: outputs and exit codes.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "orbikit/json_io.hpp"

namespace orbikit {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("orbikit_cli_" + std::string(::testing::UnitTest::GetInstance()
                                             ->current_test_info()
                                             ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  void WriteFile(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
  }

  std::string ReadFile(const std::string& name) const {
    std::ifstream is(Path(name));
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
  }

  // Runs the CLI with stdout and stderr captured; returns the exit code.
  int Run(const std::string& args) {
    const std::string cmd = std::string("'") + ORBIKIT_CLI + "' " + args + " >'" +
                            Path("out") + "' 2>'" + Path("err") + "'";
    const int status = std::system(cmd.c_str());
    out_ = ReadFile("out");
    err_ = ReadFile("err");
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
  std::string out_;
  std::string err_;
};

constexpr char kObjective22[] =
    R"({"entries":[{"i":1,"j":1,"v":1},{"i":2,"j":1,"v":-1},{"i":2,"j":2,"v":3}]})";

TEST_F(CliTest, OptimizeExample) {
  WriteFile("d.json", kObjective22);
  ASSERT_EQ(Run("optimize --p 2 --q 2 --in '" + Path("d.json") + "'"), 0) << err_;
  const Json j = ParseJson(out_);
  EXPECT_EQ(j["value"], Json("4"));
  EXPECT_EQ(j["kind"], Json("packing"));
  EXPECT_EQ(j["x"].size(), 2u);
  EXPECT_EQ(j["path"], ParseJson(R"(["s","0,0","1,1","2,2","t"])"));
}

TEST_F(CliTest, OptimizeEmptyObjectiveAndPartitioning) {
  WriteFile("e.json", R"({"entries":[]})");
  ASSERT_EQ(Run("optimize --p 3 --q 2 --in '" + Path("e.json") + "'"), 0) << err_;
  EXPECT_EQ(ParseJson(out_)["value"], Json("0"));
  WriteFile("d.json", kObjective22);
  ASSERT_EQ(Run("optimize --p 2 --q 2 --kind partitioning --in '" + Path("d.json") + "' --out '" +
                Path("r.json") + "'"),
            0);
  EXPECT_TRUE(out_.empty());
  EXPECT_EQ(ParseJson(ReadFile("r.json"))["value"], Json("4"));
}

TEST_F(CliTest, EmitCompactReportsStats) {
  ASSERT_EQ(Run("emit --p 8 --q 6 --system compact"), 0);
  EXPECT_NE(err_.find("vars=66"), std::string::npos) << err_;
  EXPECT_NE(out_.find("Subject To"), std::string::npos);
  ASSERT_EQ(Run("emit --p 1 --q 1 --system extended --format mps"), 0);
  EXPECT_NE(err_.find("vars=6"), std::string::npos) << err_;
  EXPECT_NE(out_.find("\nNAME "), std::string::npos);
  EXPECT_NE(out_.find("\nENDATA"), std::string::npos);
}

TEST_F(CliTest, SizeCap) {
  EXPECT_EQ(Run("emit --p 20 --q 10 --system sci --cap 10000"), 4);
  EXPECT_EQ(Run("stats --p 20 --q 10 --system sci --cap 10000"), 4);
  EXPECT_EQ(Run("verify --p 6 --q 2"), 4);
  EXPECT_EQ(Run("emit --p 2 --q 2 --system sci --cap 0"), 3);
}

TEST_F(CliTest, StatsAndVerify) {
  ASSERT_EQ(Run("stats --p 3 --q 2 --system sci"), 0);
  const Json stats = ParseJson(out_);
  EXPECT_EQ(stats["vars"], Json(5));
  EXPECT_EQ(stats["cons"], Json(10));
  ASSERT_EQ(Run("verify --p 2 --q 2 --suite sci"), 0) << out_;
  EXPECT_NE(out_.find("1 SCIs checked against 5 vertices"), std::string::npos) << out_;
}

TEST_F(CliTest, LiftAndSeparate) {
  WriteFile("x.json", R"({"entries":[{"i":2,"j":2,"v":1}]})");
  ASSERT_EQ(Run("separate --p 2 --q 2 --in '" + Path("x.json") + "'"), 0) << err_;
  const Json sep = ParseJson(out_);
  EXPECT_FALSE(sep["sci"].is_null());
  EXPECT_EQ(sep["sci"]["violation"], Json("1"));
  ASSERT_EQ(Run("lift --p 2 --q 2 --in '" + Path("x.json") + "'"), 0) << err_;
  EXPECT_EQ(ParseJson(out_)["feasible"], Json(false));
  WriteFile("v.json", R"({"entries":[{"i":1,"j":1,"v":1},{"i":2,"j":2,"v":1}]})");
  ASSERT_EQ(Run("lift --p 2 --q 2 --in '" + Path("v.json") + "'"), 0) << err_;
  EXPECT_EQ(ParseJson(out_)["feasible"], Json(true));
}

TEST_F(CliTest, ErrorExitCodes) {
  EXPECT_EQ(Run("verify --p 1 --q 2"), 3);
  EXPECT_EQ(Run("optimize --p 2 --q 2 --bogus"), 3);
  EXPECT_EQ(Run("optimize --p 2 --q 2 --in '" + Path("missing.json") + "'"), 5);
  WriteFile("bad.json", "{");
  EXPECT_EQ(Run("optimize --p 2 --q 2 --in '" + Path("bad.json") + "'"), 2);
  WriteFile("off.json", R"({"entries":[{"i":1,"j":2,"v":1}]})");
  EXPECT_EQ(Run("optimize --p 2 --q 2 --in '" + Path("off.json") + "'"), 2);
  WriteFile("d.json", kObjective22);
  EXPECT_EQ(Run("separate --p 2 --q 2 --in '" + Path("d.json") + "'"), 2);  // negative entry
  EXPECT_FALSE(err_.empty());
}

}  // namespace
}  // namespace orbikit
