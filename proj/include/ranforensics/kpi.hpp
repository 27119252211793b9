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

#ifndef RANFORENSICS_KPI_HPP_
#define RANFORENSICS_KPI_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ranforensics/error.hpp"
#include "ranforensics/ingest.hpp"

namespace ranforensics {

template <typename Scalar>
struct AggregateStatT {
  Scalar mean = 0;
  Scalar p95 = 0;
  std::int64_t sample_count = 0;

  bool operator==(const AggregateStatT&) const = default;
};
using AggregateStat = AggregateStatT<double>;

// Arithmetic mean and nearest-rank p95 (rank = ceil(0.95 n), 1-based).
template <typename Derived>
AggregateStatT<typename Derived::Scalar> aggregate(const Eigen::DenseBase<Derived>& series) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = series.size();
  if (n == 0) throw KpiError("no samples in steady-state window");
  Eigen::Array<Scalar, Eigen::Dynamic, 1> sorted = series.derived().reshaped();
  std::sort(sorted.begin(), sorted.end());
  // ceil(0.95 n) computed in integers: (95 n + 99) / 100.
  const Eigen::Index rank = (95 * n + 99) / 100;
  AggregateStatT<Scalar> stat;
  stat.mean = sorted.mean();
  stat.mean = std::clamp(stat.mean, sorted(0), sorted(n - 1));
  stat.p95 = sorted(std::max<Eigen::Index>(rank, 1) - 1);
  stat.sample_count = static_cast<std::int64_t>(n);
  return stat;
}

AggregateStat aggregate(std::span<const double> series);

// J = (sum x)^2 / (n sum x^2).
template <typename Derived>
typename Derived::Scalar jain_fairness(const Eigen::DenseBase<Derived>& goodputs) {
  using Scalar = typename Derived::Scalar;
  const auto& x = goodputs.derived().array();
  if (x.size() == 0) throw KpiError("jain fairness needs at least one flow");
  if ((x < Scalar(0)).any()) throw KpiError("negative goodput in fairness input");
  // Normalising by the largest share keeps the squares in range and makes
  // constant vectors evaluate to exactly 1.
  const Scalar peak = x.maxCoeff();
  if (!(peak > Scalar(0))) throw KpiError("no delivered traffic");
  const auto scaled = (x / peak).eval();
  const Scalar sum = scaled.sum();
  const Scalar sum_sq = scaled.square().sum();
  return (sum * sum) / (static_cast<Scalar>(x.size()) * sum_sq);
}

double jain_fairness(std::span<const double> goodputs);

struct SteadyStateWindow {
  std::int64_t start_epoch_ms = 0;
  std::int64_t end_epoch_ms = 0;

  // Half-open: [start, end).
  bool contains(std::int64_t t) const { return t >= start_epoch_ms && t < end_epoch_ms; }
  double seconds() const { return static_cast<double>(end_epoch_ms - start_epoch_ms) / 1000.0; }
};

inline constexpr double kDefaultHeadTrimS = 5.0;
inline constexpr double kDefaultTailTrimS = 5.0;

SteadyStateWindow steady_window(const RunBundle& bundle, double head_trim_s = kDefaultHeadTrimS,
                                double tail_trim_s = kDefaultTailTrimS);

// R_raw = N_PRB * N_sc * N_sym * f_slot * Q_m, in bits per second.
std::int64_t raw_ul_bound(const PhyConfig& phy);

double efficiency(double t1_bps, double r_raw_bps);

// Observed slot rate over the nominal slot rate. Slot deltas between
// consecutive markers are taken modulo the 1024-frame hyperframe.
double rtf(std::span<const DuLogRecord> records, const PhyConfig& phy,
           const SteadyStateWindow& window);

double ldpc_cumulative(double per_call_us, std::int64_t n_threads);

double energy_proxy(double gpu_power_w, double goodput_mbps);

double sys_cpu_core_equiv(double host_pct, std::int64_t host_core_count);

double estimate_lambda_tb(double goodput_bps, double tb_bits);

struct TelemetrySummary {
  double mean_messages_per_tick = 0.0;
  std::int64_t tick_count = 0;
  bool ever_active = false;
  bool stalled = false;
  std::optional<std::int64_t> stall_start_epoch_ms;
  double longest_silence_s = 0.0;
};

// Stall: a contiguous silence of at least stall_window_s after the stream
// had carried traffic. A capture that never carried traffic is not a stall.
TelemetrySummary summarize_telemetry(std::span<const TelemetryEvent> events, double stall_window_s);

struct KpiRow {
  StackId stack_id = StackId::OAI;
  std::int64_t ue_count = 0;
  // Absent at N = 0.
  std::optional<double> t_total_mbps;
  std::optional<double> t_per_ue_mbps;
  std::optional<double> jain_j;
  // Some flow lacked an end-of-test summary and contributed an estimate.
  bool throughput_estimated = false;
  AggregateStat du_cpu;
  AggregateStat cu_cpu;
  AggregateStat sys_cpu;
  std::optional<AggregateStat> ldpc_per_call_us;
  std::optional<AggregateStat> ldpc_cum_us;
  std::optional<double> segments_per_call;
  std::optional<AggregateStat> gpu_util;
  std::optional<AggregateStat> gpu_power_w;
  double rtf = 0.0;
  std::optional<double> flow_success_rate;
  std::int64_t complete_flows = 0;
  std::optional<double> lambda_tb;
  double du_core_budget_pct = 0.0;
  double cu_core_budget_pct = 0.0;
  std::optional<TelemetrySummary> telemetry;
};

struct KpiOptions {
  double stall_window_s = 5.0;
};

KpiRow build_kpi_row(const RunBundle& bundle, const SteadyStateWindow& window,
                     const KpiOptions& options = {});

}  // namespace ranforensics

#endif  // RANFORENSICS_KPI_HPP_
