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

#include "ranforensics/kpi.hpp"

#include <limits>
#include <numeric>

#include <fmt/format.h>

namespace ranforensics {

namespace {

constexpr std::int64_t kFramesPerHyperframe = 1024;

std::vector<double> cpu_series(const RunBundle& bundle, const SteadyStateWindow& window,
                               Subject subject) {
  std::vector<double> out;
  for (const auto& s : bundle.samples) {
    if (s.subject == subject && s.cpu_core_equiv_pct && window.contains(s.epoch_ms)) {
      out.push_back(*s.cpu_core_equiv_pct);
    }
  }
  return out;
}

// Re-raises a constituent failure with the KPI field it belongs to.
template <typename F>
auto attributed(const char* field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw KpiError(fmt::format("{}: {}", field, e.detail()));
  }
}

}  // namespace

AggregateStat aggregate(std::span<const double> series) {
  return aggregate(Eigen::Map<const Eigen::ArrayXd>(series.data(), static_cast<Eigen::Index>(series.size())));
}

double jain_fairness(std::span<const double> goodputs) {
  return jain_fairness(
      Eigen::Map<const Eigen::ArrayXd>(goodputs.data(), static_cast<Eigen::Index>(goodputs.size())));
}

SteadyStateWindow steady_window(const RunBundle& bundle, double head_trim_s, double tail_trim_s) {
  if (head_trim_s < 0 || tail_trim_s < 0) throw KpiError("steady-state trims must be non-negative");
  const double duration = bundle.manifest.run_duration_s;
  if (!(duration > head_trim_s + tail_trim_s)) {
    throw KpiError(fmt::format("trims {}+{} s exceed run duration {} s", head_trim_s, tail_trim_s, duration));
  }
  const std::int64_t start = bundle.run_start_epoch_ms();
  const auto ms = [](double s) { return static_cast<std::int64_t>(std::llround(s * 1000.0)); };
  return {start + ms(head_trim_s), start + ms(duration) - ms(tail_trim_s)};
}

std::int64_t raw_ul_bound(const PhyConfig& phy) {
  const std::int64_t factors[] = {phy.n_prb, phy.n_sc, phy.n_sym, phy.f_slot, phy.q_m};
  std::int64_t product = 1;
  for (auto f : factors) {
    if (f <= 0) throw KpiError("raw_ul_bound needs strictly positive PHY fields");
    if (product > std::numeric_limits<std::int64_t>::max() / f) throw KpiError("raw_ul_bound overflow");
    product *= f;
  }
  return product;
}

double efficiency(double t1_bps, double r_raw_bps) {
  if (!(r_raw_bps > 0)) throw KpiError("raw bound must be positive");
  return t1_bps / r_raw_bps;
}

double rtf(std::span<const DuLogRecord> records, const PhyConfig& phy, const SteadyStateWindow& window) {
  const std::int64_t per_frame = phy.slots_per_frame();
  if (per_frame <= 0) throw KpiError("slot rate must cover at least one slot per frame");
  const std::int64_t hyperframe = kFramesPerHyperframe * per_frame;

  std::int64_t slots = 0;
  std::int64_t markers = 0;
  std::int64_t first_ms = 0;
  std::int64_t last_ms = 0;
  std::int64_t prev_index = 0;
  for (const auto& rec : records) {
    const auto* marker = std::get_if<SlotMarker>(&rec.payload);
    if (!marker || !window.contains(rec.epoch_ms)) continue;
    if (marker->slot >= per_frame) {
      throw KpiError(fmt::format("slot index {} exceeds {} slots per frame", marker->slot, per_frame));
    }
    const std::int64_t index = marker->frame * per_frame + marker->slot;
    if (markers == 0) {
      first_ms = rec.epoch_ms;
    } else {
      slots += ((index - prev_index) % hyperframe + hyperframe) % hyperframe;
    }
    prev_index = index;
    last_ms = rec.epoch_ms;
    ++markers;
  }
  if (markers < 2) throw KpiError("insufficient slot markers");
  if (last_ms <= first_ms) throw KpiError("slot markers span zero wall time");
  const double observed = static_cast<double>(slots) * 1000.0 / static_cast<double>(last_ms - first_ms);
  return observed / static_cast<double>(phy.f_slot);
}

double ldpc_cumulative(double per_call_us, std::int64_t n_threads) {
  if (per_call_us < 0) throw KpiError("per-call LDPC time must be non-negative");
  if (n_threads < 1) throw KpiError("LDPC thread count must be at least 1");
  return per_call_us * static_cast<double>(n_threads);
}

double energy_proxy(double gpu_power_w, double goodput_mbps) {
  if (!(goodput_mbps > 0)) throw KpiError("energy proxy needs positive goodput");
  return gpu_power_w / goodput_mbps;
}

double sys_cpu_core_equiv(double host_pct, std::int64_t host_core_count) {
  if (host_core_count < 1) throw KpiError("host core count must be at least 1");
  return host_pct * static_cast<double>(host_core_count);
}

double estimate_lambda_tb(double goodput_bps, double tb_bits) {
  if (!(tb_bits > 0)) throw KpiError("transport block size must be positive");
  return goodput_bps / tb_bits;
}

TelemetrySummary summarize_telemetry(std::span<const TelemetryEvent> events, double stall_window_s) {
  TelemetrySummary out;
  out.tick_count = static_cast<std::int64_t>(events.size());
  if (events.empty()) return out;

  double total = 0.0;
  std::int64_t tick_ms = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    total += static_cast<double>(events[i].message_count);
    if (i > 0) {
      const auto gap = events[i].epoch_ms - events[i - 1].epoch_ms;
      if (gap > 0 && (tick_ms == 0 || gap < tick_ms)) tick_ms = gap;
    }
  }
  if (tick_ms == 0) tick_ms = 1000;
  out.mean_messages_per_tick = total / static_cast<double>(events.size());

  const auto threshold_ms = static_cast<std::int64_t>(std::llround(stall_window_s * 1000.0));
  bool silent = false;
  std::int64_t silence_start = 0;
  auto close_silence = [&](std::int64_t until_ms) {
    if (!silent) return;
    const auto length = until_ms - silence_start;
    out.longest_silence_s = std::max(out.longest_silence_s, static_cast<double>(length) / 1000.0);
    if (length >= threshold_ms && !out.stalled) {
      out.stalled = true;
      out.stall_start_epoch_ms = silence_start;
    }
    silent = false;
  };
  for (const auto& e : events) {
    if (e.message_count > 0) {
      close_silence(e.epoch_ms);
      out.ever_active = true;
    } else if (out.ever_active && !silent) {
      silent = true;
      silence_start = e.epoch_ms;
    }
  }
  close_silence(events.back().epoch_ms + tick_ms);
  return out;
}

KpiRow build_kpi_row(const RunBundle& bundle, const SteadyStateWindow& window, const KpiOptions& options) {
  if (window.end_epoch_ms <= window.start_epoch_ms) throw KpiError("steady-state window is empty");
  const auto& m = bundle.manifest;
  KpiRow row;
  row.stack_id = m.stack_id;
  row.ue_count = m.ue_count;
  row.du_core_budget_pct = 100.0 * static_cast<double>(m.du_cores.size());
  row.cu_core_budget_pct = 100.0 * static_cast<double>(m.cu_cores.size());

  row.du_cpu = attributed("du_cpu", [&] { return aggregate(cpu_series(bundle, window, Subject::DU)); });
  row.cu_cpu = attributed("cu_cpu", [&] { return aggregate(cpu_series(bundle, window, Subject::CU)); });
  row.sys_cpu = attributed("sys_cpu", [&] {
    auto host = cpu_series(bundle, window, Subject::HOST);
    for (auto& v : host) v = sys_cpu_core_equiv(v, m.host_core_count);
    return aggregate(host);
  });

  std::vector<double> per_call;
  std::vector<double> seg_ratio;
  for (const auto& rec : bundle.du_records) {
    const auto* t = std::get_if<LdpcTiming>(&rec.payload);
    if (!t || !window.contains(rec.epoch_ms)) continue;
    per_call.push_back(t->avg_call_us);
    if (t->per_seg_us > 0) seg_ratio.push_back(t->avg_call_us / t->per_seg_us);
  }
  if (!per_call.empty()) {
    row.ldpc_per_call_us = aggregate(per_call);
    std::vector<double> cum(per_call.size());
    std::transform(per_call.begin(), per_call.end(), cum.begin(),
                   [&](double v) { return ldpc_cumulative(v, m.phy.n_ldpc_threads); });
    row.ldpc_cum_us = aggregate(cum);
  }
  if (!seg_ratio.empty()) {
    row.segments_per_call = std::accumulate(seg_ratio.begin(), seg_ratio.end(), 0.0) /
                            static_cast<double>(seg_ratio.size());
  }

  std::vector<double> gpu_util;
  std::vector<double> gpu_power;
  for (const auto& s : bundle.samples) {
    if (s.subject != Subject::GPU || !window.contains(s.epoch_ms)) continue;
    if (s.gpu_util_pct) gpu_util.push_back(*s.gpu_util_pct);
    if (s.gpu_power_w) gpu_power.push_back(*s.gpu_power_w);
  }
  if (!gpu_util.empty()) row.gpu_util = aggregate(gpu_util);
  if (!gpu_power.empty()) row.gpu_power_w = aggregate(gpu_power);

  row.rtf = attributed("rtf", [&] { return rtf(bundle.du_records, m.phy, window); });

  if (m.ue_count > 0) {
    std::vector<double> goodputs;
    double total_bps = 0.0;
    for (const auto& f : bundle.flows) {
      if (f.complete) ++row.complete_flows;
      if (!f.has_data) continue;
      if (!f.complete) row.throughput_estimated = true;
      goodputs.push_back(f.goodput_bps);
      total_bps += f.goodput_bps;
    }
    const auto n = static_cast<double>(m.ue_count);
    row.t_total_mbps = total_bps / 1e6;
    row.t_per_ue_mbps = *row.t_total_mbps / n;
    row.jain_j = attributed("jain_j", [&] { return jain_fairness(goodputs); });
    row.flow_success_rate = static_cast<double>(row.complete_flows) / n;
    const double tb_bits =
        m.tb_bits.value_or(static_cast<double>(raw_ul_bound(m.phy)) / static_cast<double>(m.phy.f_slot));
    row.lambda_tb = estimate_lambda_tb(total_bps, tb_bits);
  }

  if (bundle.has_telemetry_capture) {
    std::vector<TelemetryEvent> in_window;
    for (const auto& e : bundle.telemetry) {
      if (window.contains(e.epoch_ms)) in_window.push_back(e);
    }
    row.telemetry = summarize_telemetry(in_window, options.stall_window_s);
  }
  return row;
}

}  // namespace ranforensics
