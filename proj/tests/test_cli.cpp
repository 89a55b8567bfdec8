// Copyright 2026 The ravqe Authors
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
#include <unistd.h>

#include "ravqe/cli.hpp"
#include "ravqe/records.hpp"

namespace ravqe {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ravqe_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ::unsetenv("RAVQE_WORKERS");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
  }

  static std::vector<nlohmann::json> lines(const std::string& p) {
    std::ifstream is(p);
    std::vector<nlohmann::json> out;
    std::string line;
    while (std::getline(is, line))
      if (!line.empty()) out.push_back(nlohmann::json::parse(line));
    return out;
  }

  std::vector<std::string> vqe_args(const std::string& stem, const std::string& strategy = "plain") const {
    return {"vqe",      "--n",      "4",     "--l",           "3",
            "--jz",     "1.0",      "--strategy", strategy,   "--trials",
            "5",        "--seed",   "7",     "--maxiter",     "300",
            "--out",    path(stem + ".jsonl"), "--summary",   path(stem + ".csv"),
            "--distribution", path(stem + "_dist.csv")};
  }

  fs::path dir_;
};

TEST_F(Cli, VqeRecordsAndSummary) {
  ASSERT_EQ(run_cli(vqe_args("a")), 0);
  const auto ls = lines(path("a.jsonl"));
  ASSERT_EQ(ls.size(), 6u);
  EXPECT_EQ(ls[0]["kind"], "header");
  EXPECT_EQ(ls[0]["version"], version_string());
  EXPECT_EQ(ls[0]["config"]["n"], 4);
  for (std::size_t k = 1; k < ls.size(); ++k) {
    EXPECT_EQ(ls[k]["kind"], "trial");
    EXPECT_NEAR(ls[k]["exact_energy"].get<double>(), -8.0, 1e-10);
    EXPECT_TRUE(ls[k].contains("relative_error"));
  }
  std::ifstream is(path("a.csv"));
  const auto t = read_csv(is);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_NEAR(std::stod(t.rows[0][t.column("exact")]), -8.0, 1e-10);
  EXPECT_EQ(t.rows[0][t.column("trials")], "5");
  EXPECT_NE(slurp(path("a.csv")).find("# config "), std::string::npos);
}

TEST_F(Cli, VqeDeterministicFiles) {
  ASSERT_EQ(run_cli(vqe_args("a")), 0);
  ASSERT_EQ(run_cli(vqe_args("b")), 0);
  EXPECT_EQ(slurp(path("a.jsonl")), slurp(path("b.jsonl")));
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_EQ(slurp(path("a_dist.csv")), slurp(path("b_dist.csv")));
}

TEST_F(Cli, WorkerCountDoesNotChangeOutput) {
  auto args = vqe_args("a", "ra");
  ASSERT_EQ(run_cli(args), 0);
  auto more = vqe_args("b", "ra");
  more.insert(more.end(), {"--workers", "3"});
  ASSERT_EQ(run_cli(more), 0);
  EXPECT_EQ(slurp(path("a.jsonl")), slurp(path("b.jsonl")));
  ::setenv("RAVQE_WORKERS", "2", 1);
  ASSERT_EQ(run_cli(vqe_args("c", "ra")), 0);
  EXPECT_EQ(slurp(path("a.jsonl")), slurp(path("c.jsonl")));
}

TEST_F(Cli, RaRecordsCarryEvents) {
  auto args = vqe_args("ra", "ra");
  args.insert(args.end(), {"--m", "10"});
  ASSERT_EQ(run_cli(args), 0);
  const auto ls = lines(path("ra.jsonl"));
  for (std::size_t k = 1; k < ls.size(); ++k) EXPECT_EQ(ls[k]["events"].size(), 9u);
}

TEST_F(Cli, ConfigFileWithFlagOverride) {
  {
    std::ofstream os(path("cfg.json"));
    os << R"({"n": 4, "l": 1, "strategy": {"kind": "ra", "m": 5}, "optimizer": {"kind": "sgd", "lr": 0.05},
             "maxiter": 50, "trials": 2, "seed": 3})";
  }
  ASSERT_EQ(run_cli({"vqe", "--config", path("cfg.json"), "--trials", "3", "--out", path("c.jsonl"), "--summary",
                     path("c.csv"), "--distribution", path("c_d.csv")}),
            0);
  const auto ls = lines(path("c.jsonl"));
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0]["config"]["trials"], 3);
  EXPECT_EQ(ls[0]["config"]["m"], 5);
  EXPECT_EQ(ls[1]["strategy"], "ra");
  EXPECT_EQ(ls[1]["optimizer"]["kind"], "sgd");
  EXPECT_EQ(ls[1]["optimizer"]["learning_rate"], 0.05);
}

TEST_F(Cli, UnknownConfigKeyRejected) {
  {
    std::ofstream os(path("bad.json"));
    os << R"({"n": 4, "colour": "blue"})";
  }
  EXPECT_EQ(run_cli({"vqe", "--config", path("bad.json"), "--out", path("x.jsonl")}), 1);
}

TEST_F(Cli, InvalidInputsExitNonzero) {
  EXPECT_EQ(run_cli({"vqe", "--n", "5", "--out", path("x.jsonl")}), 1);
  EXPECT_EQ(run_cli({"vqe", "--strategy", "nope", "--out", path("x.jsonl")}), 1);
  EXPECT_NE(run_cli({"frobnicate"}), 0);
  EXPECT_EQ(run_cli({"noisy", "--n", "12", "--out", path("x.jsonl")}), 1);
  ::setenv("RAVQE_WORKERS", "zero", 1);
  EXPECT_EQ(run_cli(vqe_args("w")), 1);
}

TEST_F(Cli, UnwritableOutput) {
  EXPECT_EQ(run_cli({"vqe", "--n", "4", "--l", "1", "--maxiter", "5", "--out", path("missing/dir/x.jsonl")}), 1);
}

TEST_F(Cli, BpVarianceCsvRoundTrip) {
  ASSERT_EQ(run_cli({"bp-variance", "--sizes", "4", "--l", "3", "--densities", "0.1", "1.0", "--samples", "40",
                     "--seed", "2", "--out", path("v.csv")}),
            0);
  std::ifstream is(path("v.csv"));
  const auto t = read_csv(is);
  ASSERT_EQ(t.rows.size(), 2u);
  for (const auto& row : t.rows) {
    const double v = std::stod(row[t.column("variance")]);
    EXPECT_EQ(format_double(v), row[t.column("variance")]);
    EXPECT_GT(v, 0.0);
  }
}

TEST_F(Cli, TransitionGridAndCollapse) {
  ASSERT_EQ(run_cli({"transition", "--sizes", "8", "12", "--ps", "0", "0.1", "0.2", "0.3", "0.4", "0.5", "0.6", "0.7",
                     "0.8", "0.9", "1.0", "--samples", "10", "--seed", "1", "--out", path("t.csv")}),
            0);
  std::ifstream is(path("t.csv"));
  const auto curves = read_transition_csv(is);
  ASSERT_EQ(curves.size(), 22u);
  for (const auto& c : curves) {
    if (c.p == 0.0) EXPECT_EQ(c.mean, 0.0);
    EXPECT_EQ(c.blocks, 8 * c.L);
  }
  // Collapse needs three sizes.
  EXPECT_EQ(run_cli({"collapse", "--in", path("t.csv"), "--out", path("c.csv")}), 1);
  ASSERT_EQ(run_cli({"transition", "--sizes", "4", "8", "12", "--ps", "0.2", "0.6", "1.0", "--samples", "10",
                     "--collapse", "--out", path("t3.csv"), "--collapse-out", path("t3c.csv")}),
            0);
  ASSERT_EQ(run_cli({"collapse", "--in", path("t3.csv"), "--out", path("c3.csv")}), 0);
  std::ifstream cs(path("c3.csv"));
  const auto table = read_csv(cs);
  EXPECT_EQ(table.rows.size(), 171u);
  EXPECT_NE(slurp(path("c3.csv")).find("# best_nu "), std::string::npos);
}

TEST_F(Cli, NoisyTwoRowsAndNoiselessLimit) {
  const std::vector<std::string> common{"--n", "4", "--depths", "1", "--trials", "2", "--maxiter", "30", "--seed", "5"};
  auto args = std::vector<std::string>{"noisy"};
  args.insert(args.end(), common.begin(), common.end());
  args.insert(args.end(), {"--out", path("n.jsonl"), "--summary", path("n.csv"), "--distribution", path("nd.csv")});
  ASSERT_EQ(run_cli(args), 0);
  std::ifstream is(path("n.csv"));
  EXPECT_EQ(read_csv(is).rows.size(), 2u);

  auto zero = std::vector<std::string>{"noisy", "--p-noise", "0", "--strategies", "ra"};
  zero.insert(zero.end(), common.begin(), common.end());
  zero.insert(zero.end(), {"--out", path("z.jsonl"), "--summary", path("z.csv"), "--distribution", path("zd.csv")});
  ASSERT_EQ(run_cli(zero), 0);
  auto clean = std::vector<std::string>{"sweep", "--optimizer", "sgd", "--strategies", "ra"};
  clean.insert(clean.end(), common.begin(), common.end());
  clean.insert(clean.end(), {"--out", path("s.jsonl"), "--summary", path("s.csv"), "--distribution", path("sd.csv")});
  ASSERT_EQ(run_cli(clean), 0);
  std::ifstream a(path("z.jsonl")), b(path("s.jsonl"));
  const auto ra = read_jsonl_records(a), rb = read_jsonl_records(b);
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t k = 0; k < ra.size(); ++k) EXPECT_NEAR(ra[k].final_energy, rb[k].final_energy, 1e-8);
}

TEST_F(Cli, StatsOnNumbersAndRecords) {
  {
    std::ofstream os(path("v.txt"));
    os << "# energies\n1, 2\n3 4\n100\n";
  }
  ASSERT_EQ(run_cli({"stats", "--in", path("v.txt"), "--out", path("s.csv"), "--distribution", path("d.csv")}), 0);
  std::ifstream is(path("s.csv"));
  const auto t = read_csv(is);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0][t.column("q1")], "2");
  EXPECT_EQ(t.rows[0][t.column("q3")], "4");
  EXPECT_EQ(t.rows[0][t.column("upper_fence")], "7");
  EXPECT_EQ(t.rows[0][t.column("outliers")], "1");

  ASSERT_EQ(run_cli(vqe_args("r")), 0);
  ASSERT_EQ(run_cli({"stats", "--in", path("r.jsonl"), "--exact", "-8", "--out", path("s2.csv"), "--distribution",
                     path("d2.csv")}),
            0);
  std::ifstream is2(path("s2.csv"));
  EXPECT_EQ(read_csv(is2).rows[0][0], "5");
}

TEST(Records, JsonRoundTrip) {
  TrialRecord r;
  r.index = 3;
  r.seed = 0xdeadbeefcafeULL;
  r.strategy = StrategyKind::LPA;
  r.n = 6;
  r.l = 2;
  r.jz = 0.5;
  r.trajectory = {{0, -1.5}, {10, -2.25}};
  r.final_energy = -3.0000000000000004;
  r.events = {{5, -1.0, -1.0, 12}};
  r.evaluations = 77;
  const auto back = trial_record_from_json(nlohmann::json::parse(to_json(r).dump()));
  EXPECT_EQ(to_json(back).dump(), to_json(r).dump());
  EXPECT_EQ(back.final_energy, r.final_energy);
}

}  // namespace
}  // namespace ravqe
