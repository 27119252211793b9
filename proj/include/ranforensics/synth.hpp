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

#ifndef RANFORENSICS_SYNTH_HPP_
#define RANFORENSICS_SYNTH_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ranforensics/ingest.hpp"

namespace ranforensics {

// A sampled series: steady-state mean and optional nearest-rank p95.
struct SeriesModel {
  double mean = 0.0;
  std::optional<double> p95;
};

struct TelemetryModel {
  double messages_per_tick = 100.0;
  double tick_s = 1.0;
  // Seconds after run start from which the stream carries nothing.
  std::optional<double> stall_at_s;
};

// Declared truth for one (stack, N) run.
struct RunModel {
  std::int64_t ue_count = 0;
  SeriesModel du_cpu;
  SeriesModel cu_cpu;
  SeriesModel sys_cpu;  // core-equivalent; written as host% = sys / host cores
  std::optional<SeriesModel> gpu_util;
  std::optional<SeriesModel> gpu_power_w;
  double rtf = 1.0;
  std::optional<SeriesModel> ldpc_per_call_us;
  double segments_per_call = 4.0;
  std::optional<TelemetryModel> telemetry;
  // Per-UE completeness; empty means all complete.
  std::vector<bool> flow_complete;
};

struct PowerLawModel {
  double a = 100.0;
  double b = -1.0;
};

// Aggregate goodput per N, either listed or from a power law.
using GoodputModel = std::variant<std::map<std::int64_t, double>, PowerLawModel>;

struct EqualSplit {};
// Explicit relative weights per N (normalized internally).
struct WeightSplit {
  std::map<std::int64_t, std::vector<double>> weights;
};
// One UE receives a larger share, chosen so the Jain index hits the target.
struct JainTargetSplit {
  std::map<std::int64_t, double> target;
};
using SplitModel = std::variant<EqualSplit, WeightSplit, JainTargetSplit>;

// Declared truth for one stack across all of its UE counts.
struct GroundTruth {
  StackId stack_id = StackId::OAI;
  double run_duration_s = 60.0;
  std::set<int> cu_cores{6, 7};
  std::set<int> du_cores{8, 9, 10, 11};
  std::int64_t host_core_count = 20;
  PhyConfig phy;
  double sample_interval_s = 0.5;
  std::int64_t start_epoch_ms = 1772062000000;
  GoodputModel goodput_mbps = std::map<std::int64_t, double>{};
  SplitModel split = EqualSplit{};
  std::vector<RunModel> runs;
  std::uint64_t noise_seed = 1;
  // Relative sigma of the truncated Gaussian on sampled series.
  double noise_rel_sigma = 0.0;
  // Window the synthetic p95 shaping targets; match the analysis trims.
  double shaping_head_s = 5.0;
  double shaping_tail_s = 5.0;
  // Seconds of intervals written for a flow without an end summary.
  std::optional<double> partial_coverage_s;
};

// Everything needed to write one run directory.
struct RunTruth {
  RunManifest manifest;
  RunModel model;
  std::vector<double> per_ue_goodput_bps;
  std::uint64_t noise_seed = 1;
  double noise_rel_sigma = 0.0;
  double shaping_head_s = 5.0;
  double shaping_tail_s = 5.0;
  double partial_coverage_s = 30.0;
};

std::vector<RunTruth> expand(const GroundTruth& truth);

// Per-UE weights summing to n whose Jain index equals target.
std::vector<double> jain_target_weights(std::int64_t n, double target);

// Deterministic series for the window: exact mean and nearest-rank p95
// over the samples inside [head, duration - tail).
std::vector<double> shaped_series(const SeriesModel& model, std::size_t count, double interval_s, double head_s,
                                  double duration_s, double tail_s);

std::filesystem::path generate_bundle_files(const RunTruth& truth, const std::filesystem::path& output_dir);

std::filesystem::path generate_study(const std::vector<GroundTruth>& stacks, const std::filesystem::path& output_dir);

// Scenario files are JSON; see docs/scenario.md.
std::vector<GroundTruth> parse_scenario(std::string_view document);
std::string run_dir_name(StackId stack, std::int64_t ue_count);

}  // namespace ranforensics

#endif  // RANFORENSICS_SYNTH_HPP_
