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

#ifndef RANFORENSICS_INGEST_HPP_
#define RANFORENSICS_INGEST_HPP_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ranforensics {

enum class StackId { OAI, SRK };

std::string_view to_string(StackId id);
StackId parse_stack_id(std::string_view s);

// Radio numerology behind the raw uplink bound and the LDPC worker count.
struct PhyConfig {
  std::int64_t n_prb = 106;
  std::int64_t n_sc = 12;
  std::int64_t n_sym = 14;
  std::int64_t f_slot = 2000;  // slots per second
  std::int64_t q_m = 4;        // bits per modulation symbol
  std::int64_t n_ldpc_threads = 4;

  // 10 ms radio frames.
  std::int64_t slots_per_frame() const { return f_slot / 100; }

  // Throws IngestError unless every field is strictly positive and the
  // slot rate divides into whole 10 ms frames.
  void validate() const;

  bool operator==(const PhyConfig&) const = default;
};

struct RunManifest {
  StackId stack_id = StackId::OAI;
  std::int64_t ue_count = 0;
  double run_duration_s = 60.0;
  std::set<int> cu_cores;
  std::set<int> du_cores;
  std::int64_t host_core_count = 20;
  PhyConfig phy;
  double sample_interval_s = 0.5;
  // First wall-clock millisecond of the run. When absent the earliest
  // artifact timestamp is used.
  std::optional<std::int64_t> start_epoch_ms;
  // Transport-block size used for the lambda_TB proxy; defaults to one
  // full-grid slot payload.
  std::optional<double> tb_bits;
  // Keys: du_log, flows_dir, cpu_samples, gpu_samples, telemetry.
  std::map<std::string, std::filesystem::path> artifact_paths;

  void validate() const;
};

RunManifest parse_manifest(std::string_view document,
                           const std::filesystem::path& base_dir = {});
std::string render_manifest(const RunManifest& manifest);

// Parses "8-11", "6,7" or "0-2,5" into a core set.
std::set<int> parse_core_list(std::string_view s);
std::string format_core_list(const std::set<int>& cores);

struct LdpcTiming {
  double avg_call_us = 0.0;
  double per_seg_us = 0.0;
  bool operator==(const LdpcTiming&) const = default;
};

struct SlotMarker {
  int frame = 0;
  int slot = 0;
  bool operator==(const SlotMarker&) const = default;
};

struct OtherLine {
  std::string raw;
  bool operator==(const OtherLine&) const = default;
};

using DuPayload = std::variant<LdpcTiming, SlotMarker, OtherLine>;

struct DuLogRecord {
  std::int64_t epoch_ms = 0;
  std::string source_tag;
  double stack_clock_s = 0.0;
  DuPayload payload;
};

struct Diagnostic {
  std::size_t line = 0;  // 1-based; 0 for whole-document notes
  std::string message;
};

struct DuLogParse {
  std::vector<DuLogRecord> records;
  std::vector<Diagnostic> diagnostics;
};

// Record-level problems go to diagnostics; this never throws on content.
DuLogParse parse_du_log(std::istream& lines);
DuLogParse parse_du_log(std::string_view document);

struct FlowInterval {
  double start_s = 0.0;
  double end_s = 0.0;
  double seconds = 0.0;
  double bytes = 0.0;
  double bits_per_second = 0.0;
};

struct FlowReport {
  std::string ue_id;
  double goodput_bps = 0.0;
  double bytes_transferred = 0.0;
  double duration_s = 0.0;
  // End-of-test summary present. When false, goodput is an interval-sum
  // estimate.
  bool complete = false;
  // False for a UE whose report carried no usable data at all; such a UE
  // counts as a failed flow and is excluded from fairness.
  bool has_data = true;
  std::vector<FlowInterval> intervals;

  bool estimated() const { return !complete; }
};

FlowReport parse_flow_report(std::string_view document, std::string_view ue_id);

enum class Subject { CU, DU, HOST, GPU };
std::string_view to_string(Subject s);

struct ResourceSample {
  std::int64_t epoch_ms = 0;
  Subject subject = Subject::DU;
  std::optional<double> cpu_core_equiv_pct;
  std::optional<double> gpu_util_pct;
  std::optional<double> gpu_power_w;
};

enum class SampleKind { Cpu, Gpu };

inline constexpr std::string_view kCpuSamplesHeader = "epoch_ms,subject,cpu_core_equiv_pct";
inline constexpr std::string_view kGpuSamplesHeader = "epoch_ms,subject,gpu_util_pct,gpu_power_w";
inline constexpr std::string_view kTelemetryHeader = "epoch_ms,message_count";

struct ResourceParse {
  std::vector<ResourceSample> samples;
  std::vector<Diagnostic> warnings;
};

ResourceParse parse_resource_samples(std::string_view document, SampleKind kind);

struct TelemetryEvent {
  std::int64_t epoch_ms = 0;
  std::int64_t message_count = 0;
};

std::vector<TelemetryEvent> parse_telemetry_capture(std::string_view document);

struct RunBundle {
  RunManifest manifest;
  std::vector<DuLogRecord> du_records;
  std::vector<FlowReport> flows;
  std::vector<ResourceSample> samples;
  std::vector<TelemetryEvent> telemetry;
  bool has_gpu_capture = false;
  bool has_telemetry_capture = false;
  std::vector<std::string> warnings;

  // Explicit start when the manifest carries one, otherwise the earliest
  // timestamp across all artifacts.
  std::int64_t run_start_epoch_ms() const;
};

RunBundle load_run_bundle(const std::filesystem::path& manifest_path);

std::string read_file(const std::filesystem::path& path);

}  // namespace ranforensics

#endif  // RANFORENSICS_INGEST_HPP_
