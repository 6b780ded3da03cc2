// Copyright 2026 The qperturb Authors.
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qperturb/cli.hpp"

namespace qperturb {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome Invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::Dispatch(args, in, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qperturb_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string Slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(CliTest, GenThenMaxCut) {
  const std::string k4 = Path("k4.json");
  ASSERT_EQ(Invoke({"gen", "--family", "complete", "--n", "4", "-o", k4}).code, 0);
  const Outcome r = Invoke({"maxcut", k4});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out).at("value"), 4);
}

TEST_F(CliTest, PerturbPipedIntoAut) {
  const std::string k4 = Path("k4.json");
  Invoke({"gen", "--family", "complete", "--n", "4", "-o", k4});
  const Outcome shadow = Invoke({"perturb", k4, "--kind", "shadow:2"});
  ASSERT_EQ(shadow.code, 0) << shadow.err;
  const Outcome aut = Invoke({"aut", "-"}, shadow.out);
  ASSERT_EQ(aut.code, 0) << aut.err;
  EXPECT_EQ(Json::parse(aut.out).at("order"), "48");
}

TEST_F(CliTest, SpectrumCheck) {
  const std::string k4 = Path("k4.json");
  Invoke({"gen", "--family", "complete", "--n", "4", "-o", k4});
  const Outcome r = Invoke({"spectrum", k4, "--check", "cor2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out).at("pass").get<bool>());
  const Outcome plain = Invoke({"spectrum", k4});
  ASSERT_EQ(plain.code, 0);
  EXPECT_NEAR(Json::parse(plain.out).at("spectral_radius").get<double>(), 3.0, 1e-9);
}

TEST_F(CliTest, PipedAndFileInputAgreeByteForByte) {
  const std::string g = Path("er.json");
  ASSERT_EQ(Invoke({"--seed", "5", "gen", "--family", "erdos_renyi", "--n", "7", "-o", g}).code, 0);
  const std::string text = Slurp(g);
  for (const std::vector<std::string>& cmd :
       {std::vector<std::string>{"maxcut"}, {"aut"}, {"spectrum"}, {"qaoa", "--p", "2", "--restarts", "2"},
        {"perturb", "--kind", "pendant"}}) {
    std::vector<std::string> from_file = cmd, from_pipe = cmd;
    from_file.insert(from_file.begin() + 1, g);
    from_pipe.insert(from_pipe.begin() + 1, "-");
    const Outcome a = Invoke(from_file);
    const Outcome b = Invoke(from_pipe, text);
    EXPECT_EQ(a.code, 0) << cmd[0] << a.err;
    EXPECT_EQ(a.out, b.out) << cmd[0];
    EXPECT_EQ(a.out, Invoke(from_file).out) << cmd[0] << " is not deterministic";
  }
}

TEST_F(CliTest, OutputFileMatchesStdout) {
  const Outcome a = Invoke({"gen", "--family", "binary_tree", "--height", "2"});
  ASSERT_EQ(Invoke({"gen", "--family", "binary_tree", "--height", "2", "-o", Path("t.json")}).code, 0);
  EXPECT_EQ(a.out, Slurp(Path("t.json")));
}

TEST_F(CliTest, AutPrediction) {
  const std::string t = Path("t.json");
  Invoke({"gen", "--family", "binary_tree", "--height", "3", "-o", t});
  const Outcome pred = Invoke({"aut", t, "--predict", "prop8"});
  ASSERT_EQ(pred.code, 0) << pred.err;
  const Json j = Json::parse(pred.out);
  EXPECT_EQ(j.at("order"), "128");
  EXPECT_TRUE(j.at("prediction").at("match").get<bool>());
  const Outcome na = Invoke({"aut", t, "--predict", "prop11"});
  EXPECT_EQ(na.code, 0);
  EXPECT_FALSE(Json::parse(na.out).at("prediction").at("applicable").get<bool>());
}

TEST_F(CliTest, QaoaWarmStartAndTransfer) {
  const std::string k4 = Path("k4.json");
  Invoke({"gen", "--family", "complete", "--n", "4", "-o", k4});
  const std::string p1 = Path("p1.json");
  ASSERT_EQ(Invoke({"qaoa", k4, "--p", "1", "--restarts", "3", "-o", p1}).code, 0);
  const Outcome p2 = Invoke({"qaoa", k4, "--p", "2", "--restarts", "2", "--warm-start", p1});
  ASSERT_EQ(p2.code, 0) << p2.err;
  const Json j2 = Json::parse(p2.out);
  EXPECT_GE(j2.at("f_star").get<double>(), Json::parse(Slurp(p1)).at("f_star").get<double>() - 1e-9);
  Invoke({"perturb", k4, "--kind", "shadow:1", "-o", Path("k4s.json")});
  const Outcome tr = Invoke({"qaoa", k4, "--p", "1", "--transfer-to", Path("k4s.json")});
  ASSERT_EQ(tr.code, 0) << tr.err;
  const Json jt = Json::parse(tr.out);
  EXPECT_NEAR(jt.at("transfer").at("expectation").get<double>(), jt.at("f_star").get<double>(), 1e-12);
}

TEST_F(CliTest, ExperimentAndReport) {
  const std::string cfg = Path("small.cfg");
  std::ofstream(cfg) << "families = complete: 3\nvariants = base, shadow:1\np = 1-2\nseeds = 1\nrestarts = 1\n";
  const std::string out = Path("run");
  const Outcome r = Invoke({"experiment", "--config", cfg, "-o", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out).at("rows"), 4);
  EXPECT_TRUE(fs::exists(out + "/records.csv"));
  const Outcome rep = Invoke({"report", out + "/records.csv", "--plots", Path("plots")});
  ASSERT_EQ(rep.code, 0) << rep.err;
  EXPECT_EQ(Json::parse(rep.out).at("plots").size(), 4U);
}

TEST_F(CliTest, PrettyOutput) {
  const Outcome r = Invoke({"--pretty", "maxcut", "-"}, R"({"n":2,"edges":[[0,1]]})");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("value: 1"), std::string::npos) << r.out;
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(Invoke({"maxcut", "x.json", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(Invoke({"spectrum", "x.json", "--check", "nope"}).code, cli::kExitUsage);
  EXPECT_EQ(Invoke({"gen"}).code, cli::kExitUsage);

  const Outcome missing = Invoke({"maxcut", Path("missing.json")});
  EXPECT_EQ(missing.code, cli::kExitDomainError);
  EXPECT_EQ(Json::parse(missing.err).at("error"), "IoError");

  const Outcome bad_json = Invoke({"maxcut", "-"}, "{not json");
  EXPECT_EQ(bad_json.code, cli::kExitDomainError);
  EXPECT_EQ(Json::parse(bad_json.err).at("error"), "ParseError");

  const Outcome infeasible = Invoke({"gen", "--family", "random_regular", "--d", "3", "--n", "5"});
  EXPECT_EQ(infeasible.code, cli::kExitDomainError);
  EXPECT_EQ(Json::parse(infeasible.err).at("error"), "InfeasibleDegreeSequence");

  const Outcome zero = Invoke({"perturb", "-", "--kind", "delete"}, R"({"n":3,"edges":[]})");
  EXPECT_EQ(zero.code, cli::kExitDomainError);
  EXPECT_EQ(Json::parse(zero.err).at("error"), "EmptyEdgeSet");

  EXPECT_EQ(Invoke({"--help"}).code, cli::kExitOk);
}

}  // namespace
}  // namespace qperturb
