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

#ifndef RANFORENSICS_DIAGNOSE_HPP_
#define RANFORENSICS_DIAGNOSE_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ranforensics/ingest.hpp"
#include "ranforensics/kpi.hpp"

namespace ranforensics {

struct ThresholdConfig {
  double fairness_floor = 0.99;
  // Relative change below which a utilization step counts as flat.
  double util_trend_tolerance = 0.05;
  double rtf_dilation_ceiling = 0.9;
  // Fraction of the pinned-core budget that counts as saturated.
  double budget_saturation_fraction = 0.9;
  double stall_window_s = 5.0;
  // t_cum is stable when max/min <= 1 + band.
  double t_cum_stability_band = 0.25;

  void validate() const;
};

enum class EvidenceKind {
  FairnessNearIdeal,
  FairnessViolated,
  UtilizationDecreasing,
  UtilizationSaturating,
  RtfDilation,
  TelemetryStall,
  TcumStable,
  LambdaCollapse,
  PartialData,
};

std::string_view to_string(EvidenceKind kind);
EvidenceKind parse_evidence_kind(std::string_view s);

struct Evidence {
  EvidenceKind kind = EvidenceKind::FairnessNearIdeal;
  std::string detail;
  std::vector<std::pair<std::string, double>> supporting_values;

  bool operator==(const Evidence&) const = default;
};

enum class Verdict { HarnessLimited, ComputeBound, SchedulerUnfair, Indeterminate };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view s);

struct Diagnosis {
  StackId stack_id = StackId::OAI;
  Verdict verdict = Verdict::Indeterminate;
  std::vector<Evidence> evidence;
  std::vector<std::string> data_quality_notes;

  bool has(EvidenceKind kind) const;
};

struct UtilizationConsistency {
  // Utilization ratios track lambda_TB * t_cum ratios within tolerance.
  bool consistent = true;
  std::vector<std::string> violations;
  // TcumStable and/or LambdaCollapse when observed.
  std::vector<Evidence> evidence;
};

// Checks U ~ lambda_TB * t_cum across aligned per-N series. Ratios are taken
// against the first point.
UtilizationConsistency utilization_consistency(std::span<const double> lambda_tb,
                                               std::span<const double> t_cum,
                                               std::span<const double> util, double tolerance,
                                               double t_cum_band = 0.25,
                                               std::span<const double> ue_counts = {});

struct StallCheck {
  std::optional<Evidence> evidence;
  std::optional<std::string> note;
};

StallCheck detect_telemetry_stall(std::span<const TelemetryEvent> events, double window_s);

// Rows must be sorted by strictly increasing N. Rows with N = 0 are idle
// baselines: they feed notes but not the verdict.
Diagnosis classify(std::span<const KpiRow> rows, const ThresholdConfig& thresholds = {});

std::vector<std::string> data_quality_flags(const RunBundle& bundle);

}  // namespace ranforensics

#endif  // RANFORENSICS_DIAGNOSE_HPP_
