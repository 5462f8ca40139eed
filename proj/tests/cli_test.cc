// Copyright 2026 The Authors.
//
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

#include "divcom_tools/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "divcom/datagen.h"
#include "divcom/profile_io.h"
#include "divcom_tools/experiment.h"

namespace divcom::tools {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "divcom");
  std::vector<const char*> argv;
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("divcom_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    profile_ = (dir_ / "small.txt").string();
    SaveProfile(profile_, ResampleElection({.q = 0.2, .phi = 0.6,
                                            .num_voters = 60,
                                            .num_candidates = 24, .seed = 5}));
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
  std::string profile_;
};

TEST_F(CliTest, RunPrintsResult) {
  const Outcome outcome =
      Invoke({"run", "--profile", profile_, "--algo", "greedy", "--k", "3"});
  ASSERT_EQ(outcome.code, 0) << outcome.err;
  const RunResult expected = Greedy(LoadProfile(profile_), 3);
  std::string committee = "committee:";
  for (Candidate c : expected.committee.SortedMembers()) {
    committee += " " + std::to_string(c);
  }
  EXPECT_NE(outcome.out.find(committee + "\n"), std::string::npos)
      << outcome.out;
  EXPECT_NE(outcome.out.find("covered: " + std::to_string(expected.covered) +
                             "/60"),
            std::string::npos);
}

TEST_F(CliTest, RunWritesCsvRow) {
  const std::string csv = (dir_ / "row.csv").string();
  const Outcome outcome =
      Invoke({"run", "--profile", profile_, "--algo", "greedy_incomplete", "--k",
           "3", "--t", "8", "--M", "2", "--seed", "4", "--out", csv});
  ASSERT_EQ(outcome.code, 0) << outcome.err;
  const std::string text = Slurp(csv);
  EXPECT_EQ(text.substr(0, text.find('\n')), kCsvHeader);
  EXPECT_NE(text.find("\nsmall,greedy_incomplete,3,2,0,"), std::string::npos)
      << text;
}

TEST_F(CliTest, BadArgumentsFail) {
  const Outcome big_k =
      Invoke({"run", "--profile", profile_, "--algo", "greedy", "--k", "99"});
  EXPECT_NE(big_k.code, 0);
  EXPECT_NE(big_k.err.find("k=99"), std::string::npos) << big_k.err;
  EXPECT_NE(Invoke({"run", "--profile", profile_, "--algo", "nope", "--k", "2"})
                .code,
            0);
  EXPECT_NE(Invoke({"run", "--profile", (dir_ / "missing.txt").string(),
                 "--algo", "greedy", "--k", "2"})
                .code,
            0);
  EXPECT_NE(Invoke({"frobnicate"}).code, 0);
  EXPECT_NE(Invoke({"calc", "inaccurate-repeats", "--n", "10", "--m", "10",
                 "--p", "0.5"})
                .code,
            0);
}

TEST_F(CliTest, Calculators) {
  const Outcome greedy = Invoke({"calc", "greedy-budget", "--m", "1000", "--k",
                              "8", "--t", "20"});
  ASSERT_EQ(greedy.code, 0) << greedy.err;
  EXPECT_NE(greedy.out.find("sample_size: 326\n"), std::string::npos);
  EXPECT_NE(greedy.out.find("query_sets_per_round: 83\n"), std::string::npos);
  EXPECT_NE(greedy.out.find("budget: 4329280\n"), std::string::npos);

  const Outcome ls =
      Invoke({"calc", "ls-budget", "--m", "1000", "--k", "8", "--t", "20"});
  ASSERT_EQ(ls.code, 0) << ls.err;
  EXPECT_NE(ls.out.find("beta: 0.01060805\n"), std::string::npos) << ls.out;
  EXPECT_NE(ls.out.find("iteration_cap: 272\n"), std::string::npos);

  const Outcome repeats = Invoke({"calc", "inaccurate-repeats", "--n", "1921",
                               "--m", "197", "--p", "0.1"});
  ASSERT_EQ(repeats.code, 0) << repeats.err;
  EXPECT_EQ(repeats.out, "repeats: 32\n");
}

TEST_F(CliTest, ExperimentIsDeterministic) {
  const std::vector<std::string> args = {
      "experiment", "--profile", profile_,   "--algo",
      "greedy,greedy_incomplete,local_search,ls_incomplete",
      "--k",        "3",        "--t",       "8",
      "--M",        "1,3",      "--p",       "0,0.1",
      "--trials",   "2",        "--seed",    "11"};
  std::vector<std::string> first_args = args;
  first_args.insert(first_args.end(),
                    {"--out", (dir_ / "a.csv").string(), "--threads", "3"});
  std::vector<std::string> second_args = args;
  second_args.insert(second_args.end(),
                     {"--out", (dir_ / "b.csv").string(), "--threads", "1"});
  ASSERT_EQ(Invoke(first_args).code, 0);
  ASSERT_EQ(Invoke(second_args).code, 0);
  const std::string a = Slurp(dir_ / "a.csv");
  EXPECT_EQ(a, Slurp(dir_ / "b.csv"));
  EXPECT_EQ(a.substr(0, a.find('\n') + 1),
            "dataset,algorithm,k,M,p,trial,seed,cc,relative,queries,ms\n");
  // Per trial: 2 complete rows per p plus 2 incomplete algorithms x 2 M x 2 p.
  const auto lines = std::count(a.begin(), a.end(), '\n');
  EXPECT_EQ(lines, 1 + 2 * (2 * 2 + 2 * 2 * 2));
}

TEST_F(CliTest, ExperimentWritesSummaryAndPlots) {
  const std::string prefix = (dir_ / "fig").string();
  const Outcome outcome = Invoke(
      {"experiment", "--synthetic", "2", "--n", "40", "--m", "20", "--k", "3",
       "--t", "6", "--algo", "greedy,greedy_incomplete,approval_voting",
       "--M", "1,2", "--out", (dir_ / "e.csv").string(), "--summary",
       (dir_ / "s.csv").string(), "--plot", prefix});
  ASSERT_EQ(outcome.code, 0) << outcome.err;
  EXPECT_TRUE(fs::exists(prefix + "_scores.svg"));
  EXPECT_TRUE(fs::exists(prefix + "_relative.svg"));
  EXPECT_EQ(Slurp(prefix + "_scores.svg").rfind("<svg", 0), 0u);
  EXPECT_FALSE(Slurp(dir_ / "s.csv").empty());
}

TEST_F(CliTest, GenerateIsByteIdenticalAndMatchesSyntheticSeeds) {
  const std::vector<std::string> base = {"generate", "--q", "0.1", "--phi",
                                         "0.5",      "--n", "30",  "--m",
                                         "15",       "--count", "3", "--seed",
                                         "7",        "--out"};
  std::vector<std::string> first = base;
  first.push_back((dir_ / "g1").string());
  std::vector<std::string> second = base;
  second.push_back((dir_ / "g2").string());
  ASSERT_EQ(Invoke(first).code, 0);
  ASSERT_EQ(Invoke(second).code, 0);
  for (int i = 0; i < 3; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "election_%03d.txt", i);
    const std::string text = Slurp(dir_ / "g1" / name);
    ASSERT_FALSE(text.empty()) << name;
    EXPECT_EQ(text, Slurp(dir_ / "g2" / name));
    EXPECT_EQ(LoadProfile(dir_ / "g1" / name),
              ResampleElection({.q = 0.1, .phi = 0.5, .num_voters = 30,
                                .num_candidates = 15,
                                .seed = SyntheticSeed(7, i)}));
  }
}

TEST_F(CliTest, IngestHonoursManifest) {
  fs::create_directories(dir_ / "raw" / "alpha");
  fs::create_directories(dir_ / "raw" / "beta");
  const std::string matrix =
      "participant,group-id,0,1,2\n"
      "a,0,1,-1,\n"
      "b,0,-1,1,0\n"
      "c,1,,,\n"
      "d,1,-1,-1,1\n";
  std::ofstream(dir_ / "raw" / "alpha" / "participants-votes.csv") << matrix;
  std::ofstream(dir_ / "raw" / "beta" / "participants-votes.csv") << matrix;
  std::ofstream(dir_ / "manifest.txt") << "# kept\nalpha\n";
  const Outcome outcome =
      Invoke({"ingest", "--input-dir", (dir_ / "raw").string(), "--manifest",
           (dir_ / "manifest.txt").string(), "--out",
           (dir_ / "clean").string()});
  ASSERT_EQ(outcome.code, 0) << outcome.err;
  EXPECT_NE(outcome.err.find("skipping"), std::string::npos) << outcome.err;
  EXPECT_NE(outcome.out.find("\nalpha,4,3,0,1,0,"), std::string::npos)
      << outcome.out;
  EXPECT_EQ(outcome.out.find("\nbeta,"), std::string::npos);
  EXPECT_EQ(LoadProfile(dir_ / "clean" / "alpha.txt"),
            ApprovalProfile(3, {{0}, {1}, {2}}));
  EXPECT_FALSE(fs::exists(dir_ / "clean" / "beta.txt"));
}

}  // namespace
}  // namespace divcom::tools
