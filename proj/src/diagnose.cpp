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

#include "ranforensics/diagnose.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

namespace ranforensics {

namespace {

enum class Trend { Decreasing, NonDecreasing, Mixed };

// Decreasing: every step falls and the overall drop exceeds the tolerance.
// Non-decreasing: no step falls by more than the tolerance.
Trend classify_trend(const std::vector<double>& series, double tol) {
  bool all_falling = true;
  bool none_falling = true;
  for (std::size_t i = 1; i < series.size(); ++i) {
    const double prev = series[i - 1];
    const double rel = prev != 0.0 ? (series[i] - prev) / std::abs(prev) : series[i] - prev;
    if (!(rel < 0)) all_falling = false;
    if (rel < -tol) none_falling = false;
  }
  const double first = series.front();
  const double overall = first != 0.0 ? (series.back() - first) / std::abs(first) : 0.0;
  if (all_falling && overall < -tol) return Trend::Decreasing;
  if (none_falling) return Trend::NonDecreasing;
  return Trend::Mixed;
}

std::string n_label(double n) { return fmt::format("N={}", n); }

constexpr std::array<std::pair<EvidenceKind, std::string_view>, 9> kEvidenceNames{{
    {EvidenceKind::FairnessNearIdeal, "FairnessNearIdeal"},
    {EvidenceKind::FairnessViolated, "FairnessViolated"},
    {EvidenceKind::UtilizationDecreasing, "UtilizationDecreasing"},
    {EvidenceKind::UtilizationSaturating, "UtilizationSaturating"},
    {EvidenceKind::RtfDilation, "RtfDilation"},
    {EvidenceKind::TelemetryStall, "TelemetryStall"},
    {EvidenceKind::TcumStable, "TcumStable"},
    {EvidenceKind::LambdaCollapse, "LambdaCollapse"},
    {EvidenceKind::PartialData, "PartialData"},
}};

constexpr std::array<std::pair<Verdict, std::string_view>, 4> kVerdictNames{{
    {Verdict::HarnessLimited, "HarnessLimited"},
    {Verdict::ComputeBound, "ComputeBound"},
    {Verdict::SchedulerUnfair, "SchedulerUnfair"},
    {Verdict::Indeterminate, "Indeterminate"},
}};

}  // namespace

void ThresholdConfig::validate() const {
  auto open_unit = [](double v) { return v > 0.0 && v < 1.0; };
  if (!open_unit(fairness_floor)) throw DiagnoseError("fairness_floor must lie in (0, 1)");
  if (!open_unit(util_trend_tolerance)) throw DiagnoseError("util_trend_tolerance must lie in (0, 1)");
  if (!(rtf_dilation_ceiling > 0)) throw DiagnoseError("rtf_dilation_ceiling must be positive");
  if (!(budget_saturation_fraction > 0 && budget_saturation_fraction <= 1)) {
    throw DiagnoseError("budget_saturation_fraction must lie in (0, 1]");
  }
  if (!(stall_window_s > 0)) throw DiagnoseError("stall_window_s must be positive");
  if (!(t_cum_stability_band > 0)) throw DiagnoseError("t_cum_stability_band must be positive");
}

std::string_view to_string(EvidenceKind kind) {
  for (const auto& [k, name] : kEvidenceNames) {
    if (k == kind) return name;
  }
  return "?";
}

EvidenceKind parse_evidence_kind(std::string_view s) {
  for (const auto& [k, name] : kEvidenceNames) {
    if (name == s) return k;
  }
  throw DiagnoseError(fmt::format("unknown evidence kind '{}'", s));
}

std::string_view to_string(Verdict v) {
  for (const auto& [k, name] : kVerdictNames) {
    if (k == v) return name;
  }
  return "?";
}

Verdict parse_verdict(std::string_view s) {
  for (const auto& [k, name] : kVerdictNames) {
    if (name == s) return k;
  }
  throw DiagnoseError(fmt::format("unknown verdict '{}'", s));
}

bool Diagnosis::has(EvidenceKind kind) const {
  return std::any_of(evidence.begin(), evidence.end(), [kind](const Evidence& e) { return e.kind == kind; });
}

UtilizationConsistency utilization_consistency(std::span<const double> lambda_tb,
                                               std::span<const double> t_cum,
                                               std::span<const double> util, double tolerance,
                                               double t_cum_band, std::span<const double> ue_counts) {
  const auto n = lambda_tb.size();
  if (t_cum.size() != n || util.size() != n || (!ue_counts.empty() && ue_counts.size() != n)) {
    throw DiagnoseError("utilization consistency series are misaligned");
  }
  if (n < 2) throw DiagnoseError("utilization consistency needs at least two points");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lambda_tb[i] > 0) || !(t_cum[i] > 0) || !(util[i] > 0)) {
      throw DiagnoseError("utilization consistency needs strictly positive series");
    }
  }
  auto label = [&](std::size_t i) {
    return ue_counts.empty() ? fmt::format("#{}", i) : n_label(ue_counts[i]);
  };

  UtilizationConsistency out;
  const double work0 = lambda_tb[0] * t_cum[0];
  double worst = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double predicted = lambda_tb[i] * t_cum[i] / work0;
    const double observed = util[i] / util[0];
    const double deviation = std::abs(observed / predicted - 1.0);
    worst = std::max(worst, deviation);
    if (deviation > tolerance) {
      out.consistent = false;
      out.violations.push_back(fmt::format("{}: utilization ratio {:.4f} vs predicted {:.4f}", label(i),
                                           observed, predicted));
    }
  }

  const auto [tmin, tmax] = std::minmax_element(t_cum.begin(), t_cum.end());
  const double spread = *tmax / *tmin;
  if (spread <= 1.0 + t_cum_band) {
    Evidence e{EvidenceKind::TcumStable,
               fmt::format("per-TB cumulative decoder time varies by {:.3f}x across N (band {:.2f})", spread,
                           1.0 + t_cum_band),
               {}};
    for (std::size_t i = 0; i < n; ++i) e.supporting_values.emplace_back("t_cum_us@" + label(i), t_cum[i]);
    out.evidence.push_back(std::move(e));
  }

  const double lambda_ratio = lambda_tb[n - 1] / lambda_tb[0];
  const double util_ratio = util[n - 1] / util[0];
  if (lambda_ratio < 1.0 - tolerance) {
    Evidence e;
    e.kind = EvidenceKind::LambdaCollapse;
    e.detail = util_ratio < 1.0 - tolerance
                   ? fmt::format("decoded-TB rate falls to {:.3f}x and utilization to {:.3f}x: decoder is under-fed",
                                 lambda_ratio, util_ratio)
                   : fmt::format("decoded-TB rate falls to {:.3f}x while utilization holds at {:.3f}x",
                                 lambda_ratio, util_ratio);
    for (std::size_t i = 0; i < n; ++i) e.supporting_values.emplace_back("lambda_tb@" + label(i), lambda_tb[i]);
    e.supporting_values.emplace_back("max_proportionality_deviation", worst);
    out.evidence.push_back(std::move(e));
  }
  return out;
}

StallCheck detect_telemetry_stall(std::span<const TelemetryEvent> events, double window_s) {
  StallCheck out;
  if (events.empty()) {
    out.note = "no telemetry captured";
    return out;
  }
  const auto summary = summarize_telemetry(events, window_s);
  if (!summary.ever_active) {
    out.note = "telemetry never active";
    return out;
  }
  if (summary.stalled) {
    out.evidence = Evidence{
        EvidenceKind::TelemetryStall,
        fmt::format("telemetry stream fell silent for {:.1f} s after carrying traffic", summary.longest_silence_s),
        {{"stall_start_epoch_ms", static_cast<double>(*summary.stall_start_epoch_ms)},
         {"longest_silence_s", summary.longest_silence_s},
         {"mean_messages_per_tick", summary.mean_messages_per_tick}}};
  }
  return out;
}

Diagnosis classify(std::span<const KpiRow> rows, const ThresholdConfig& thresholds) {
  thresholds.validate();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].ue_count <= rows[i - 1].ue_count) {
      throw DiagnoseError("rows must be sorted by strictly increasing UE count");
    }
    if (rows[i].stack_id != rows[0].stack_id) throw DiagnoseError("rows mix stacks");
  }
  std::vector<const KpiRow*> active;
  for (const auto& r : rows) {
    if (r.ue_count >= 1) active.push_back(&r);
  }
  if (active.size() < 2) throw DiagnoseError("classification needs at least two rows with N >= 1");

  Diagnosis d;
  d.stack_id = rows[0].stack_id;
  const auto& last = *active.back();

  // Fairness.
  bool fairness_ok = true;
  Evidence fair{EvidenceKind::FairnessNearIdeal, {}, {}};
  Evidence unfair{EvidenceKind::FairnessViolated, {}, {}};
  double min_j = 1.0;
  for (const auto* r : active) {
    if (!r->jain_j) continue;
    min_j = std::min(min_j, *r->jain_j);
    fair.supporting_values.emplace_back("J@" + n_label(static_cast<double>(r->ue_count)), *r->jain_j);
    if (*r->jain_j < thresholds.fairness_floor) {
      fairness_ok = false;
      unfair.supporting_values.emplace_back("J@" + n_label(static_cast<double>(r->ue_count)), *r->jain_j);
    }
  }
  if (fairness_ok) {
    fair.detail = fmt::format("Jain index >= {:.4f} at every N (min {:.6f})", thresholds.fairness_floor, min_j);
    if (fair.supporting_values.empty()) fair.supporting_values.emplace_back("min_J", min_j);
    d.evidence.push_back(std::move(fair));
  } else {
    unfair.detail = fmt::format("Jain index below floor {:.4f} (min {:.6f})", thresholds.fairness_floor, min_j);
    d.evidence.push_back(std::move(unfair));
  }

  // Utilization trends: DU CPU always, GPU when every active row has it.
  struct Signal {
    std::string name;
    std::vector<double> means;
    double budget;
  };
  std::vector<Signal> signals;
  {
    Signal du{"du_cpu", {}, last.du_core_budget_pct};
    for (const auto* r : active) du.means.push_back(r->du_cpu.mean);
    signals.push_back(std::move(du));
    const bool gpu = std::all_of(active.begin(), active.end(), [](const KpiRow* r) { return r->gpu_util.has_value(); });
    if (gpu) {
      Signal g{"gpu_util", {}, 100.0};
      for (const auto* r : active) g.means.push_back(r->gpu_util->mean);
      signals.push_back(std::move(g));
    }
  }
  bool du_decreasing = false;
  bool any_saturating = false;
  for (const auto& s : signals) {
    const auto trend = classify_trend(s.means, thresholds.util_trend_tolerance);
    const double peak = *std::max_element(s.means.begin(), s.means.end());
    auto values = [&] {
      std::vector<std::pair<std::string, double>> v;
      for (std::size_t i = 0; i < active.size(); ++i) {
        v.emplace_back(s.name + "@" + n_label(static_cast<double>(active[i]->ue_count)), s.means[i]);
      }
      return v;
    };
    if (trend == Trend::Decreasing) {
      if (s.name == "du_cpu") du_decreasing = true;
      d.evidence.push_back({EvidenceKind::UtilizationDecreasing,
                            fmt::format("{} mean falls {:.1f}% from N={} to N={}", s.name,
                                        100.0 * (1.0 - s.means.back() / s.means.front()), active.front()->ue_count,
                                        last.ue_count),
                            values()});
    } else if (trend == Trend::NonDecreasing && s.budget > 0 &&
               peak >= thresholds.budget_saturation_fraction * s.budget) {
      any_saturating = true;
      auto v = values();
      v.emplace_back(s.name + "_budget", s.budget);
      d.evidence.push_back({EvidenceKind::UtilizationSaturating,
                            fmt::format("{} rises with N and peaks at {:.1f}% of its {:.0f}% budget", s.name,
                                        100.0 * peak / s.budget, s.budget),
                            std::move(v)});
    }
  }

  // Time base.
  const bool dilated = last.rtf < thresholds.rtf_dilation_ceiling;
  if (dilated) {
    Evidence e{EvidenceKind::RtfDilation,
               fmt::format("RTF {:.3f} at N={} is below {:.2f}: slots advance slower than wall clock", last.rtf,
                           last.ue_count, thresholds.rtf_dilation_ceiling),
               {}};
    for (const auto* r : active) {
      e.supporting_values.emplace_back("rtf@" + n_label(static_cast<double>(r->ue_count)), r->rtf);
    }
    d.evidence.push_back(std::move(e));
  }

  // Decoder work per TB against delivered TB rate.
  const bool have_work = std::all_of(active.begin(), active.end(), [](const KpiRow* r) {
    return r->ldpc_cum_us && r->lambda_tb && *r->lambda_tb > 0 && r->ldpc_cum_us->mean > 0 && r->du_cpu.mean > 0;
  });
  if (have_work) {
    std::vector<double> lambda, tcum, util, ns;
    for (const auto* r : active) {
      lambda.push_back(*r->lambda_tb);
      tcum.push_back(r->ldpc_cum_us->mean);
      util.push_back(r->du_cpu.mean);
      ns.push_back(static_cast<double>(r->ue_count));
    }
    auto uc = utilization_consistency(lambda, tcum, util, thresholds.util_trend_tolerance,
                                      thresholds.t_cum_stability_band, ns);
    for (auto& e : uc.evidence) d.evidence.push_back(std::move(e));
  }

  // Instrumentation health.
  for (const auto* r : active) {
    if (!r->telemetry) continue;
    if (r->telemetry->stalled) {
      d.evidence.push_back({EvidenceKind::TelemetryStall,
                            fmt::format("telemetry stream stalls at N={} ({:.1f} s of silence)", r->ue_count,
                                        r->telemetry->longest_silence_s),
                            {{"N", static_cast<double>(r->ue_count)},
                             {"longest_silence_s", r->telemetry->longest_silence_s},
                             {"mean_messages_per_tick", r->telemetry->mean_messages_per_tick}}});
    } else if (!r->telemetry->ever_active) {
      d.data_quality_notes.push_back(fmt::format("N={}: telemetry never active", r->ue_count));
    }
  }

  // Data quality.
  Evidence partial{EvidenceKind::PartialData, {}, {}};
  for (const auto* r : active) {
    if (r->flow_success_rate && *r->flow_success_rate < 1.0) {
      partial.supporting_values.emplace_back("flow_success_rate@" + n_label(static_cast<double>(r->ue_count)),
                                             *r->flow_success_rate);
      d.data_quality_notes.push_back(
          fmt::format("N={}: flow_success_rate={:.3f}; utilization aggregates may be biased low", r->ue_count,
                      *r->flow_success_rate));
    }
    if (r->throughput_estimated) {
      d.data_quality_notes.push_back(
          fmt::format("N={}: throughput includes interval-sum estimates for incomplete flow reports", r->ue_count));
    }
  }
  if (!partial.supporting_values.empty()) {
    partial.detail = "some flow reports lack end-of-test summaries; interpret high-N points conservatively";
    d.evidence.push_back(std::move(partial));
  }
  for (const auto& r : rows) {
    if (r.ue_count == 0 && r.ldpc_per_call_us) {
      d.data_quality_notes.push_back(fmt::format(
          "N=0: LDPC timings present without active UEs (mean {:.2f} us); excluded from classification",
          r.ldpc_per_call_us->mean));
    }
  }

  // Rule precedence.
  if (!fairness_ok) {
    d.verdict = Verdict::SchedulerUnfair;
  } else if (any_saturating && !dilated) {
    d.verdict = Verdict::ComputeBound;
  } else if (du_decreasing && dilated) {
    d.verdict = Verdict::HarnessLimited;
  } else {
    d.verdict = Verdict::Indeterminate;
  }

  std::stable_sort(d.evidence.begin(), d.evidence.end(),
                   [](const Evidence& a, const Evidence& b) { return a.kind < b.kind; });
  return d;
}

std::vector<std::string> data_quality_flags(const RunBundle& bundle) {
  std::vector<std::string> notes;
  const auto& m = bundle.manifest;
  std::int64_t complete = 0;
  for (const auto& f : bundle.flows) {
    if (f.complete) {
      ++complete;
    } else if (f.has_data) {
      notes.push_back(fmt::format("flow {} incomplete: goodput estimated from intervals", f.ue_id));
    } else {
      notes.push_back(fmt::format("flow {} carries no usable data; counted as failed and excluded from fairness",
                                  f.ue_id));
    }
  }
  const auto present = static_cast<std::int64_t>(bundle.flows.size());
  if (present < m.ue_count) {
    notes.push_back(fmt::format("{} of {} flow reports missing", m.ue_count - present, m.ue_count));
  }
  if (m.ue_count > 0 && complete < m.ue_count) {
    notes.push_back(fmt::format("flow_success_rate={:.3f}; utilization aggregates may be biased low",
                                static_cast<double>(complete) / static_cast<double>(m.ue_count)));
  }
  if (m.stack_id == StackId::SRK && !bundle.has_gpu_capture) {
    notes.push_back("accelerator stack without GPU capture; GPU KPIs unavailable");
  }
  return notes;
}

}  // namespace ranforensics
