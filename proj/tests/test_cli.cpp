// Copyright 2026 The ranforensics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "ranforensics/ingest.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int status = -1;
  std::string out;
  std::string err;
};

Result run_cli(const std::string& args, const rftest::TempDir& scratch) {
  const auto err_path = scratch / "stderr.txt";
  const std::string cmd = std::string("\"") + RF_CLI_PATH + "\" " + args + " 2>\"" + err_path.string() + "\"";
  Result r;
  std::FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = fs::exists(err_path) ? ranforensics::read_file(err_path) : "";
  return r;
}

const std::string kScenarios = std::string(RF_SOURCE_DIR) + "/scenarios";

}  // namespace

TEST(Cli, FitPrintsRoundedCoefficients) {
  rftest::TempDir t("cli");
  const auto r = run_cli("fit --points 1:114.59,3:65.21,6:35.09,12:16.35", t);
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "a=129.08 b=-0.7759 r2_log=0.9668\n");
}

TEST(Cli, FitJsonAndFile) {
  rftest::TempDir t("cli");
  rftest::write_text(t / "pts.txt", "# SRK\n1:103.34\n3:66.44\n6:35.01\n12:16.15\n");
  const auto r = run_cli("fit --json --points-file \"" + (t / "pts.txt").string() + "\"", t);
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["a"].get<double>(), 120.07, 0.005);
  EXPECT_NEAR(j["b"].get<double>(), -0.7406, 0.0005);
}

TEST(Cli, AdviseListsPlatforms) {
  rftest::TempDir t("cli");
  const auto r = run_cli("advise --require \"WG4 7.2x fronthaul (HIL)=native\"", t);
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("3 platform(s)"), std::string::npos) << r.out;
}

TEST(Cli, ModuleErrorIsJsonOnStderr) {
  rftest::TempDir t("cli");
  const auto r = run_cli("fit --points 1:100", t);
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(r.out.empty());
  const auto j = nlohmann::json::parse(r.err);
  EXPECT_EQ(j["error"]["module"], "fit");
  EXPECT_FALSE(j["error"]["message"].get<std::string>().empty());
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST(Cli, ParseErrorExitsTwo) {
  rftest::TempDir t("cli");
  const auto r = run_cli("analyze --study", t);
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(nlohmann::json::parse(r.err)["error"]["module"], "cli");
}

TEST(Cli, SynthAnalyzeReportPipeline) {
  rftest::TempDir t("cli");
  const auto data = (t / "data").string();
  auto r = run_cli("synth --scenario \"" + kScenarios + "/reference_study.json\" --out \"" + data + "\"", t);
  ASSERT_EQ(r.status, 0) << r.err;
  const auto study = data + "/study.manifest";

  r = run_cli("analyze --study \"" + study + "\" --out \"" + (t / "a").string() + "\"", t);
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("OAI: HarnessLimited"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("SRK: HarnessLimited"), std::string::npos) << r.out;
  for (const char* f : {"report.txt", "report.json", "plot_oai.csv", "plot_srk.csv"}) {
    EXPECT_TRUE(fs::exists(t / "a" / f)) << f;
  }

  // Same inputs, same bytes.
  r = run_cli("analyze --threads 1 --study \"" + study + "\" --out \"" + (t / "b").string() + "\"", t);
  ASSERT_EQ(r.status, 0) << r.err;
  for (const char* f : {"report.txt", "report.json", "plot_oai.csv", "plot_srk.csv"}) {
    EXPECT_EQ(ranforensics::read_file(t / "a" / f), ranforensics::read_file(t / "b" / f)) << f;
  }

  const auto json_path = (t / "a" / "report.json").string();
  r = run_cli("report --input \"" + json_path + "\" --format text", t);
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, ranforensics::read_file(t / "a" / "report.txt"));

  r = run_cli("diagnose --json --report \"" + json_path + "\"", t);
  ASSERT_EQ(r.status, 0) << r.err;
  const auto d = nlohmann::json::parse(r.out);
  ASSERT_EQ(d.size(), 2u);

  r = run_cli("report --input \"" + json_path + "\" --format yaml", t);
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(nlohmann::json::parse(r.err)["error"]["module"], "report");
}

TEST(Cli, ProgressionNamesStages) {
  rftest::TempDir t("cli");
  const auto r = run_cli("progression --claim fronthaul-timing", t);
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("1. "), std::string::npos);
  EXPECT_NE(r.out.find("O-RU/OFH"), std::string::npos) << r.out;
}
