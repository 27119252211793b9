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

#include <cmath>
#include <cstdlib>
#include <sstream>

#include <fmt/format.h>

#include "fixtures.hpp"
#include "ranforensics/error.hpp"
#include "ranforensics/fit.hpp"
#include "ranforensics/report.hpp"
#include "ranforensics/text.hpp"
#include "test_util.hpp"

namespace rf = ranforensics;
namespace fs = std::filesystem;

namespace {

// Shared across the suite; generating and analyzing once keeps the tests fast.
class ReportTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = new rftest::TempDir("report");
    auto oai = rftest::simple_truth(rf::StackId::OAI, {{0, 0, 8, 3.2},
                                                        {1, 114.59, 324.79, 1.84},
                                                        {3, 65.21, 289.93, 1.05},
                                                        {6, 35.09, 205.54, 0.55},
                                                        {12, 16.35, 162.38, 0.28}});
    auto srk = rftest::simple_truth(rf::StackId::SRK, {{1, 103.34, 300, 1.7},
                                                        {3, 66.44, 280, 0.98},
                                                        {6, 35.01, 210, 0.52},
                                                        {12, 16.15, 170, 0.28}});
    const auto study = rf::generate_study({oai, srk}, dir_->path() / "study");
    report_ = new rf::StudyReport(rf::analyze_study(study));
  }
  static void TearDownTestSuite() {
    delete report_;
    delete dir_;
  }

  static rftest::TempDir* dir_;
  static rf::StudyReport* report_;
};

rftest::TempDir* ReportTest::dir_ = nullptr;
rf::StudyReport* ReportTest::report_ = nullptr;

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_F(ReportTest, TextTableHasOneRowPerN) {
  const auto text = rf::render_text(*report_);
  const auto* oai = report_->find(rf::StackId::OAI);
  ASSERT_NE(oai, nullptr);
  ASSERT_EQ(oai->rows.size(), 5u);
  // The idle row carries NA cells for every throughput column.
  int idle_rows = 0;
  for (const auto& line : lines_of(text)) {
    const auto cells = rf::text::split_ws(line);
    if (!cells.empty() && cells[0] == "0") {
      ++idle_rows;
      EXPECT_NE(line.find("NA"), std::string::npos) << line;
    }
  }
  EXPECT_EQ(idle_rows, 1) << text;
}

TEST_F(ReportTest, TextContainsEveryKpiCell) {
  const auto text = rf::render_text(*report_);
  for (const auto& s : report_->stacks) {
    for (const auto& r : s.rows) {
      const auto cell = [](const rf::AggregateStat& a) { return fmt::format("{:.2f}/{:.2f}", a.mean, a.p95); };
      EXPECT_NE(text.find(cell(r.du_cpu)), std::string::npos);
      EXPECT_NE(text.find(cell(r.cu_cpu)), std::string::npos);
      EXPECT_NE(text.find(cell(r.sys_cpu)), std::string::npos);
      if (r.ldpc_cum_us) EXPECT_NE(text.find(cell(*r.ldpc_cum_us)), std::string::npos);
      if (r.gpu_power_w) EXPECT_NE(text.find(cell(*r.gpu_power_w)), std::string::npos);
      if (r.t_total_mbps) EXPECT_NE(text.find(fmt::format("{:.2f}", *r.t_total_mbps)), std::string::npos);
      if (r.jain_j) EXPECT_NE(text.find(fmt::format("{:.6f}", *r.jain_j)), std::string::npos);
      EXPECT_NE(text.find(fmt::format("{:.2f}", r.rtf)), std::string::npos);
    }
    ASSERT_TRUE(s.fit);
    EXPECT_NE(text.find(fmt::format("{:.4f}", s.fit->b)), std::string::npos);
  }
  EXPECT_NE(text.find("HarnessLimited"), std::string::npos);
}

TEST_F(ReportTest, FitMatchesMeasuredTable) {
  const auto* oai = report_->find(rf::StackId::OAI);
  ASSERT_TRUE(oai->fit);
  EXPECT_NEAR(oai->fit->a, 129.08, 0.05);
  EXPECT_NEAR(oai->fit->b, -0.7759, 0.0005);
  ASSERT_TRUE(oai->collapse_ratio);
  EXPECT_NEAR(*oai->collapse_ratio, 114.59 / 16.35, 1e-6);
  EXPECT_EQ(oai->collapse_from_n, 1);
  EXPECT_EQ(oai->collapse_to_n, 12);
  const auto* srk = report_->find(rf::StackId::SRK);
  ASSERT_TRUE(srk->energy_proxy_first && srk->energy_proxy_last);
  EXPECT_NEAR(*srk->energy_proxy_first, 25.0 / 103.34, 1e-6);
  EXPECT_NEAR(*srk->energy_proxy_last, 25.0 / 16.15, 1e-6);
  EXPECT_FALSE(oai->energy_proxy_first);
}

TEST_F(ReportTest, JsonRoundTripIsStable) {
  const auto json = rf::render_json(*report_);
  const auto back = rf::parse_report_json(json);
  EXPECT_EQ(rf::render_json(back), json);
  EXPECT_EQ(rf::render_json(*report_), json);
  ASSERT_EQ(back.stacks.size(), report_->stacks.size());
  for (std::size_t i = 0; i < back.stacks.size(); ++i) {
    EXPECT_EQ(back.stacks[i].stack_id, report_->stacks[i].stack_id);
    EXPECT_EQ(back.stacks[i].diagnosis.verdict, report_->stacks[i].diagnosis.verdict);
    ASSERT_EQ(back.stacks[i].rows.size(), report_->stacks[i].rows.size());
    for (std::size_t k = 0; k < back.stacks[i].rows.size(); ++k) {
      EXPECT_EQ(back.stacks[i].rows[k].du_cpu, report_->stacks[i].rows[k].du_cpu);
      EXPECT_EQ(back.stacks[i].rows[k].t_total_mbps, report_->stacks[i].rows[k].t_total_mbps);
      EXPECT_EQ(back.stacks[i].rows[k].rtf, report_->stacks[i].rows[k].rtf);
    }
  }
}

TEST_F(ReportTest, JsonRejectsGarbage) {
  EXPECT_THROW(rf::parse_report_json("{"), rf::ReportError);
  EXPECT_THROW(rf::parse_report_json(R"({"schema":"other"})"), rf::ReportError);
}

TEST_F(ReportTest, CsvPlotMeasuredThenCurve) {
  const auto* oai = report_->find(rf::StackId::OAI);
  const auto lines = lines_of(rf::render_csv_plot(*oai));
  ASSERT_EQ(lines.size(), 1u + 4u + 25u);
  EXPECT_EQ(lines[0], "n,t_measured,t_fitted");
  for (std::size_t i = 1; i <= 4; ++i) {
    const auto cells = rf::text::split(lines[i], ',');
    ASSERT_EQ(cells.size(), 3u);
    EXPECT_FALSE(cells[1].empty());
  }
  for (std::size_t i = 5; i < lines.size(); ++i) {
    const auto cells = rf::text::split(lines[i], ',');
    ASSERT_EQ(cells.size(), 3u);
    EXPECT_TRUE(cells[1].empty());
    const double n = std::stod(std::string(cells[0]));
    EXPECT_NEAR(std::stod(std::string(cells[2])), rf::predict(*oai->fit, n), 1e-9 * rf::predict(*oai->fit, n));
  }
}

TEST_F(ReportTest, FormatsAndFiles) {
  EXPECT_EQ(rf::parse_report_format("text"), rf::ReportFormat::Text);
  EXPECT_EQ(rf::parse_report_format("json"), rf::ReportFormat::Json);
  EXPECT_EQ(rf::parse_report_format("csv-plot"), rf::ReportFormat::CsvPlot);
  EXPECT_THROW(rf::parse_report_format("yaml"), rf::ReportError);

  const auto out = dir_->path() / "out";
  const auto written = rf::write_report_files(*report_, out);
  EXPECT_EQ(written.size(), 4u);
  for (const char* f : {"report.txt", "report.json", "plot_oai.csv", "plot_srk.csv"}) {
    EXPECT_TRUE(fs::exists(out / f)) << f;
  }
  const auto first = rf::read_file(out / "report.json");
  rf::write_report_files(*report_, out);
  EXPECT_EQ(rf::read_file(out / "report.json"), first);
}

TEST_F(ReportTest, ThreadCountDoesNotChangeOutput) {
  rf::AnalyzeOptions one;
  one.max_threads = 1;
  rf::AnalyzeOptions many;
  many.max_threads = 8;
  const auto study = dir_->path() / "study" / "study.manifest";
  EXPECT_EQ(rf::render_json(rf::analyze_study(study, one)), rf::render_json(rf::analyze_study(study, many)));
}

TEST(Report, ThreadEnvironment) {
  EXPECT_EQ(rf::resolve_thread_count(3, 10), 3u);
  EXPECT_EQ(rf::resolve_thread_count(16, 2), 2u);
  ::setenv("RAN_FORENSICS_THREADS", "2", 1);
  EXPECT_EQ(rf::resolve_thread_count(8, 10), 2u);
  EXPECT_LE(rf::resolve_thread_count(0, 10), 2u);
  ::setenv("RAN_FORENSICS_THREADS", "zero", 1);
  EXPECT_THROW(rf::resolve_thread_count(0, 10), rf::ReportError);
  ::unsetenv("RAN_FORENSICS_THREADS");
  EXPECT_GE(rf::resolve_thread_count(0, 10), 1u);
}

TEST(Report, StudyManifestParsing) {
  const auto runs = rf::parse_study_manifest("# study\nrun=oai_n1/run.manifest\n\nrun=oai_n3/run.manifest\n", "/data");
  ASSERT_EQ(runs.size(), 2u);
  EXPECT_EQ(runs[0], fs::path("/data/oai_n1/run.manifest"));
  EXPECT_THROW(rf::parse_study_manifest("# nothing\n", "/data"), rf::IngestError);
  EXPECT_THROW(rf::parse_study_manifest("bogus line\n", "/data"), rf::IngestError);
}

TEST(Report, MissingStudyFails) {
  EXPECT_THROW(rf::analyze_study("/nonexistent/study.manifest"), rf::Error);
}
