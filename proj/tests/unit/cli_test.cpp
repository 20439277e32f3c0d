// Copyright 2026 The sqfree Authors
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

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "../support/golden.hpp"
#include "sqfree/tables.hpp"

namespace sqfree {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Table table_of(const Result& r) { return parse_table(r.out, TableFormat::csv); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv("SQFREE_CACHE");
    dir_ = fs::temp_directory_path() /
           ("sqfree-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override {
    unsetenv("SQFREE_CACHE");
    fs::remove_all(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(CliTest, Count) {
  const Result r = run({"count", "--alphabet", "3", "--max-len", "45"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Table t = table_of(r);
  EXPECT_EQ(t.columns, (std::vector<std::string>{"n", "omega", "log_ratio", "upper_j2"}));
  EXPECT_EQ(t.rows.back()[1], "1812876");
  EXPECT_EQ(t.rows.back()[2], "0.26397903");
  EXPECT_EQ(t.rows.back()[3], "0.29345734");
}

TEST_F(CliTest, Classify) {
  Table t = table_of(run({"classify", "--alphabet", "3", "--max-len", "20"}));
  EXPECT_EQ(t.rows.back(), (std::vector<std::string>{"20", "54", "1488", "846", "0.02261307", "0.62311558",
                                                     "0.35427136"}));
  for (const auto& row : t.rows) {
    EXPECT_NEAR(std::stod(row[4]) + std::stod(row[5]) + std::stod(row[6]), 1.0, 2e-8);
  }
  t = table_of(run({"classify", "--alphabet", "3", "--max-len", "7"}));
  for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) EXPECT_EQ(t.rows[i][1], "0");
  EXPECT_EQ(t.rows.back()[1], "6");
}

TEST_F(CliTest, PsiAndPoly) {
  Table t = table_of(run({"psi", "--n", "5", "--x", "5"}));
  EXPECT_EQ(t.rows.back(), (std::vector<std::string>{"5", "5", "120"}));
  t = table_of(run({"poly", "--n", "4"}));
  EXPECT_EQ(t.rows.back()[4], "x^2(x-1)(x-2)");
  EXPECT_EQ(t.rows.back()[2], R"(["0","0","2","-3","1"])");
  t = table_of(run({"poly", "--n", "3", "--show-remainder"}));
  EXPECT_EQ(t.columns.back(), "remainder_degree");
  EXPECT_EQ(t.rows.back()[5], "0");
  EXPECT_EQ(t.rows.back()[6], "");
  t = table_of(run({"poly", "--n", "8", "--show-remainder"}));
  for (const auto& row : t.rows) {
    if (!row[6].empty()) EXPECT_LE(std::stoi(row[6]), std::stoi(row[0]) - 2);
  }
}

TEST_F(CliTest, BoundsAndEntropy) {
  Table t = table_of(run({"bounds", "--alphabet", "3", "--max-len", "60"}));
  EXPECT_EQ(t.rows[0][4], "0.28577868");
  EXPECT_EQ(t.rows[0][3], "0.26371071");
  t = table_of(run({"table", "--id", "3", "--row", "6"}));
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][1], "18");
  EXPECT_EQ(t.rows[0][2], "0.57597230");
  EXPECT_NEAR(std::stod(t.rows[0][3]), 1.56682, 2e-5);
  EXPECT_EQ(t.rows[0][4], "1.57028618");
  EXPECT_EQ(t.rows[0][5], "1.60943791");
  EXPECT_EQ(t.rows[0][6], "1.56679924");
  t = table_of(run({"entropy", "--alphabet", "3", "--max-len", "60", "--fit-lo", "50"}));
  EXPECT_EQ(t.rows[0][2], "0.26371071");
  EXPECT_EQ(t.rows[0][8], "50");
  EXPECT_EQ(t.rows[0][9], "60");
}

TEST_F(CliTest, TableOneDiffsAgainstGolden) {
  const Table t = table_of(run({"table", "--id", "1", "--max-len", "30"}));
  const Table golden = testing::golden_table("table1.csv");
  ASSERT_EQ(t.rows.size(), 30u);
  for (std::size_t i = 0; i < 30; ++i) {
    EXPECT_EQ(t.rows[i][1], golden.rows[i][1]);
    EXPECT_EQ(t.rows[i][2], golden.rows[i][2]);
  }
  const Table t2 = table_of(run({"table", "--id", "2", "--max-len", "30"}));
  const Table golden2 = testing::golden_table("table2.csv");
  for (std::size_t i = 0; i < 30; ++i) EXPECT_EQ(t2.rows[i], golden2.rows[i]);
}

TEST_F(CliTest, OutputFormatsRoundTrip) {
  const Result csv = run({"classify", "--max-len", "15"});
  for (const char* f : {"json", "tsv"}) {
    const Result other = run({"classify", "--max-len", "15", "--format", f});
    ASSERT_EQ(other.code, 0);
    EXPECT_EQ(parse_table(other.out, parse_table_format(f)), table_of(csv)) << f;
  }
  const Result json = run({"count", "--max-len", "5", "--format", "json"});
  EXPECT_NE(json.out.find(R"("omega": "30")"), std::string::npos);
}

TEST_F(CliTest, WritesToOutFile) {
  const Result r = run({"count", "--max-len", "10", "--out", path("t.csv")});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(testing::read_file(path("t.csv")), run({"count", "--max-len", "10"}).out);
}

TEST_F(CliTest, DeterministicAcrossWorkerCounts) {
  const std::string one = run({"classify", "--max-len", "34", "--workers", "1"}).out;
  EXPECT_EQ(run({"classify", "--max-len", "34", "--workers", "4"}).out, one);
  EXPECT_EQ(run({"classify", "--max-len", "34", "--workers", "3", "--split-depth", "9"}).out, one);
  EXPECT_EQ(run({"classify", "--max-len", "34", "--symmetry", "none"}).out, one);
}

TEST_F(CliTest, CacheResumeIsByteIdentical) {
  const std::string cold = run({"classify", "--max-len", "30"}).out;
  // Partial cache, then a longer run resumes from it.
  ASSERT_EQ(run({"classify", "--max-len", "20", "--cache", path("c.jsonl")}).code, 0);
  ASSERT_TRUE(fs::exists(path("c.jsonl")));
  EXPECT_EQ(run({"classify", "--max-len", "30", "--cache", path("c.jsonl")}).out, cold);
  // Fully cached.
  EXPECT_EQ(run({"classify", "--max-len", "30", "--cache", path("c.jsonl")}).out, cold);
  // Count output is the same whether or not the cache holds classes.
  EXPECT_EQ(run({"count", "--max-len", "30", "--cache", path("c.jsonl")}).out, run({"count", "--max-len", "30"}).out);
  // The environment variable is the default cache path.
  setenv("SQFREE_CACHE", path("env.jsonl").c_str(), 1);
  EXPECT_EQ(run({"classify", "--max-len", "30"}).out, cold);
  EXPECT_TRUE(fs::exists(path("env.jsonl")));
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"count", "--bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"count", "--alphabet", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"count", "--format", "xml"}).code, cli::kUsage);
  EXPECT_EQ(run({"poly", "--n", "12"}).code, cli::kUsage);
  EXPECT_EQ(run({"table", "--id", "3", "--row", "13"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
  const Result overflow = run({"count", "--alphabet", "256", "--max-len", "30"});
  EXPECT_EQ(overflow.code, cli::kFailure);
  EXPECT_NE(overflow.err.find("x=256"), std::string::npos) << overflow.err;

  {
    std::ofstream bad(path("bad.jsonl"));
    bad << R"({"format":"sqfree-count-cache","version":1,"engine":"1.0.0","symmetry":"fix-first-two"})" << '\n'
        << R"({"x":3,"n":10,"total":"145","ext":["0","84","60"]})" << '\n';
  }
  EXPECT_EQ(run({"count", "--max-len", "12", "--cache", path("bad.jsonl")}).code, cli::kFailure);
  {
    std::ofstream wrong(path("wrong.jsonl"));
    wrong << R"({"format":"sqfree-count-cache","version":1,"engine":"1.0.0","symmetry":"fix-first-two"})" << '\n'
          << R"({"x":3,"n":12,"total":"263"})" << '\n';
  }
  EXPECT_EQ(run({"count", "--max-len", "12", "--cache", path("wrong.jsonl")}).code, cli::kFailure);
}

TEST(CliDepths, BoundsTable) {
  EXPECT_EQ(cli::bounds_table_depth(3), 90u);
  EXPECT_EQ(cli::bounds_table_depth(12), 12u);
}

}  // namespace
}  // namespace sqfree
