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

#ifndef RANFORENSICS_REPORT_HPP_
#define RANFORENSICS_REPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ranforensics/diagnose.hpp"
#include "ranforensics/fit.hpp"
#include "ranforensics/ingest.hpp"
#include "ranforensics/kpi.hpp"

namespace ranforensics {

struct AnalyzeOptions {
  double head_trim_s = kDefaultHeadTrimS;
  double tail_trim_s = kDefaultTailTrimS;
  ThresholdConfig thresholds;
  // 0: RAN_FORENSICS_THREADS if set, else hardware concurrency.
  std::size_t max_threads = 0;
};

struct StackReport {
  StackId stack_id = StackId::OAI;
  // Sorted by UE count.
  std::vector<KpiRow> rows;
  std::optional<PowerLawFit> fit;
  Diagnosis diagnosis;
  std::int64_t r_raw_bps = 0;
  // T(N=1) / R_raw.
  std::optional<double> efficiency;
  // T at the smallest active N over T at the largest.
  std::optional<double> collapse_ratio;
  std::int64_t collapse_from_n = 0;
  std::int64_t collapse_to_n = 0;
  // GPU power over aggregate goodput, W/Mbps.
  std::optional<double> energy_proxy_first;
  std::optional<double> energy_proxy_last;
};

struct StudyReport {
  std::vector<StackReport> stacks;
  ThresholdConfig thresholds;
  double head_trim_s = kDefaultHeadTrimS;
  double tail_trim_s = kDefaultTailTrimS;
  std::vector<std::string> notes;

  const StackReport* find(StackId id) const;
};

// Lines "run=<path>" relative to the study file; '#' starts a comment.
std::vector<std::filesystem::path> parse_study_manifest(std::string_view document,
                                                        const std::filesystem::path& base_dir);

std::size_t resolve_thread_count(std::size_t requested, std::size_t jobs);

StudyReport build_report(const std::vector<RunBundle>& bundles, const AnalyzeOptions& options = {});
StudyReport analyze_study(const std::filesystem::path& study_manifest, const AnalyzeOptions& options = {});

enum class ReportFormat { Text, Json, CsvPlot };
ReportFormat parse_report_format(std::string_view s);

struct RenderedDocument {
  std::string filename;
  std::string content;
};

std::vector<RenderedDocument> render_report(const StudyReport& report, ReportFormat format);
std::string render_text(const StudyReport& report);
std::string render_json(const StudyReport& report);
// n,t_measured,t_fitted: measured points, then fitted curve samples with an
// empty t_measured cell.
std::string render_csv_plot(const StackReport& stack, std::size_t curve_samples = 25);

StudyReport parse_report_json(std::string_view document);

// Writes report.txt, report.json and plot_<stack>.csv; returns written paths.
std::vector<std::filesystem::path> write_report_files(const StudyReport& report,
                                                      const std::filesystem::path& out_dir);

}  // namespace ranforensics

#endif  // RANFORENSICS_REPORT_HPP_
