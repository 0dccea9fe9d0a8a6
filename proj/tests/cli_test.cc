// Copyright 2026 The pgeom Authors
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

#include <filesystem>
#include <sstream>
#include <string>

#include "certificate.h"
#include "commands.h"
#include "gtest/gtest.h"
#include "pgeom/io.h"

namespace pgeom::tool {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pgeom_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    opt_.out = dir_.string();
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Save(const Certificate& c) {
    const std::string path = (dir_ / (c.claim_id + ".json")).string();
    WriteTextFile(path, c.ToJson().dump(2));
    return path;
  }

  fs::path dir_;
  Options opt_;
};

TEST_F(CliTest, CertificateJsonRoundTrip) {
  Certificate c;
  c.claim_id = "example";
  c.parameters["q"] = 3;
  c.Set(true);
  c.AddFile("example.points", "1:0:0\n");
  c.data["m"] = 2;
  c.counters["pairs"] = 10;
  c.wall_seconds = 1.5;
  const Certificate back = Certificate::FromJson(c.ToJson());
  EXPECT_EQ(back.claim_id, "example");
  EXPECT_EQ(back.verdict, Verdict::kVerified);
  ASSERT_EQ(back.files.size(), 1u);
  EXPECT_EQ(back.files[0].hash, ContentHash("1:0:0\n"));
  EXPECT_EQ(back.PayloadHash(), c.PayloadHash());
  // Wall time is not part of the payload.
  c.wall_seconds = 9;
  EXPECT_EQ(back.PayloadHash(), c.PayloadHash());
  c.data["m"] = 3;
  EXPECT_NE(back.PayloadHash(), c.PayloadHash());
}

TEST_F(CliTest, ExitCodesFollowVerdicts) {
  EXPECT_EQ(ExitCode(Verdict::kVerified), kExitVerified);
  EXPECT_EQ(ExitCode(Verdict::kRefuted), kExitRefuted);
  EXPECT_EQ(ExitCode(Verdict::kInconclusive), kExitRefuted);
  EXPECT_EQ(ExitCode(Verdict::kBudgetExhausted), kExitUsage);
  EXPECT_EQ(ParseVerdict("verified"), Verdict::kVerified);
}

TEST_F(CliTest, CatalogCountsHermitianSurface) {
  Args a;
  a.space = "H:3:q2=9";
  const Certificate c = CmdCatalog(opt_, a);
  EXPECT_EQ(c.verdict, Verdict::kVerified);
  EXPECT_NE(c.ToText().find("280"), std::string::npos);
}

TEST_F(CliTest, ConstructionCertificateReplays) {
  Args a;
  a.positional = {"segre-hemisystem"};
  a.q = 3;
  const Certificate c = CmdConstruct(opt_, a);
  ASSERT_EQ(c.verdict, Verdict::kVerified);
  Args v;
  v.positional = {"certificate", Save(c)};
  EXPECT_EQ(CmdVerify(opt_, v).verdict, Verdict::kVerified);
}

TEST_F(CliTest, TamperedWitnessIsRefuted) {
  Args a;
  a.positional = {"segre-hemisystem"};
  a.q = 3;
  const Certificate c = CmdConstruct(opt_, a);
  const std::string cert = Save(c);
  ASSERT_FALSE(c.files.empty());
  const fs::path witness = dir_ / c.files.back().path;
  WriteTextFile(witness.string(), "# tampered\n" + ReadTextFile(witness.string()));
  Args v;
  v.positional = {"certificate", cert};
  EXPECT_EQ(CmdVerify(opt_, v).verdict, Verdict::kRefuted);
}

TEST_F(CliTest, VerifyRefutesNonRegularSystem) {
  WriteTextFile((dir_ / "one.lines").string(), "2x4\n1:0:0:0\n0:0:1:0\n");
  Args v;
  v.positional = {"regular-system", (dir_ / "one.lines").string()};
  v.space = "W:3:3";
  v.m = 1;
  const Certificate c = CmdVerify(opt_, v);
  EXPECT_NE(c.verdict, Verdict::kVerified);
}

TEST_F(CliTest, UsageErrors) {
  Args a;
  a.positional = {"no-such-construction"};
  EXPECT_THROW(CmdConstruct(opt_, a), UsageError);
  Args v;
  v.positional = {"no-such-claim"};
  EXPECT_THROW(CmdVerify(opt_, v), UsageError);
}

TEST_F(CliTest, ReplaySelectedCriteria) {
  Args a;
  a.criteria = {3};
  std::ostringstream progress;
  const Certificate c = CmdReplay(opt_, a, progress);
  EXPECT_EQ(c.verdict, Verdict::kVerified);
  EXPECT_NE(progress.str().find("PASS"), std::string::npos);
}

}  // namespace
}  // namespace pgeom::tool
