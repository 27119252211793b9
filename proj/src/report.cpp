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

#include "ranforensics/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <thread>

#include <fmt/format.h>

#include "json.hpp"
#include "ranforensics/error.hpp"
#include "ranforensics/text.hpp"

namespace ranforensics {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::string_view kReportSchema = "ranforensics-report/1";

struct RunResult {
  KpiRow row;
  std::vector<std::string> notes;
};

// Runs fn(i) for i in [0, jobs) on up to `threads` workers; rethrows the
// first failure by index so errors are deterministic.
template <typename Fn>
void parallel_for(std::size_t jobs, std::size_t threads, Fn fn) {
  std::vector<std::exception_ptr> failures(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs; i = next++) {
      try {
        fn(i);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

std::string run_label(const RunManifest& m) { return fmt::format("{} N={}", to_string(m.stack_id), m.ue_count); }

RunResult analyze_bundle(const RunBundle& bundle, const AnalyzeOptions& options) {
  const auto label = run_label(bundle.manifest);
  RunResult out;
  try {
    const auto window = steady_window(bundle, options.head_trim_s, options.tail_trim_s);
    out.row = build_kpi_row(bundle, window, KpiOptions{options.thresholds.stall_window_s});
  } catch (const Error& e) {
    throw Error(e.module(), fmt::format("{}: {}", label, e.detail()));
  }
  std::vector<std::string> seen;
  auto add = [&](const std::string& note) {
    if (std::find(seen.begin(), seen.end(), note) != seen.end()) return;
    seen.push_back(note);
    out.notes.push_back(fmt::format("{}: {}", label, note));
  };
  for (const auto& w : bundle.warnings) add(w);
  for (const auto& n : data_quality_flags(bundle)) add(n);
  return out;
}

const KpiRow* first_active(const std::vector<KpiRow>& rows) {
  for (const auto& r : rows) {
    if (r.ue_count >= 1 && r.t_total_mbps) return &r;
  }
  return nullptr;
}

const KpiRow* last_active(const std::vector<KpiRow>& rows) {
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (it->ue_count >= 1 && it->t_total_mbps) return &*it;
  }
  return nullptr;
}

std::optional<double> energy_of(const KpiRow* r) {
  if (!r || !r->gpu_power_w || !r->t_total_mbps || !(*r->t_total_mbps > 0)) return std::nullopt;
  return energy_proxy(r->gpu_power_w->mean, *r->t_total_mbps);
}

StudyReport assemble(std::vector<RunResult> results, const std::vector<std::int64_t>& r_raw,
                     const AnalyzeOptions& options) {
  StudyReport report;
  report.thresholds = options.thresholds;
  report.head_trim_s = options.head_trim_s;
  report.tail_trim_s = options.tail_trim_s;

  std::map<StackId, StackReport> stacks;
  for (std::size_t i = 0; i < results.size(); ++i) {
    auto& s = stacks[results[i].row.stack_id];
    s.stack_id = results[i].row.stack_id;
    if (s.r_raw_bps != 0 && s.r_raw_bps != r_raw[i]) {
      throw ReportError(fmt::format("{} runs disagree on the PHY configuration", to_string(s.stack_id)));
    }
    s.r_raw_bps = r_raw[i];
    for (const auto& r : s.rows) {
      if (r.ue_count == results[i].row.ue_count) {
        throw ReportError(fmt::format("duplicate run ({}, N={})", to_string(s.stack_id), r.ue_count));
      }
    }
    s.rows.push_back(std::move(results[i].row));
    for (auto& n : results[i].notes) report.notes.push_back(std::move(n));
  }

  for (auto& [id, s] : stacks) {
    std::sort(s.rows.begin(), s.rows.end(), [](const KpiRow& a, const KpiRow& b) { return a.ue_count < b.ue_count; });
    const auto name = std::string(to_string(id));

    std::vector<ScalingPoint> points;
    for (const auto& r : s.rows) {
      if (r.ue_count >= 1 && r.t_total_mbps) points.push_back({static_cast<double>(r.ue_count), *r.t_total_mbps});
    }
    try {
      s.fit = fit_power_law(points);
    } catch (const FitError& e) {
      report.notes.push_back(fmt::format("{}: no power-law fit ({})", name, e.detail()));
    }

    for (const auto& r : s.rows) {
      if (r.ue_count == 1 && r.t_total_mbps) s.efficiency = efficiency(*r.t_total_mbps * 1e6, static_cast<double>(s.r_raw_bps));
    }
    const auto* first = first_active(s.rows);
    const auto* last = last_active(s.rows);
    if (first && last && first != last && *last->t_total_mbps > 0) {
      s.collapse_ratio = collapse_ratio(*first->t_total_mbps, *last->t_total_mbps);
      s.collapse_from_n = first->ue_count;
      s.collapse_to_n = last->ue_count;
    }
    s.energy_proxy_first = energy_of(first);
    s.energy_proxy_last = energy_of(last);

    try {
      s.diagnosis = classify(s.rows, options.thresholds);
    } catch (const DiagnoseError& e) {
      s.diagnosis = Diagnosis{};
      s.diagnosis.stack_id = id;
      s.diagnosis.verdict = Verdict::Indeterminate;
      s.diagnosis.data_quality_notes.push_back(fmt::format("not classified: {}", e.detail()));
    }
    report.stacks.push_back(std::move(s));
  }
  return report;
}

// ---- JSON ----

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json stat_json(const AggregateStat& s) {
  return {{"mean", s.mean}, {"p95", s.p95}, {"sample_count", s.sample_count}};
}

json opt_stat(const std::optional<AggregateStat>& s) { return s ? stat_json(*s) : json(nullptr); }

json row_json(const KpiRow& r) {
  json j;
  j["ue_count"] = r.ue_count;
  j["t_total_mbps"] = opt(r.t_total_mbps);
  j["t_per_ue_mbps"] = opt(r.t_per_ue_mbps);
  j["jain_j"] = opt(r.jain_j);
  j["throughput_estimated"] = r.throughput_estimated;
  j["du_cpu"] = stat_json(r.du_cpu);
  j["cu_cpu"] = stat_json(r.cu_cpu);
  j["sys_cpu"] = stat_json(r.sys_cpu);
  j["ldpc_per_call_us"] = opt_stat(r.ldpc_per_call_us);
  j["ldpc_cum_us"] = opt_stat(r.ldpc_cum_us);
  j["segments_per_call"] = opt(r.segments_per_call);
  j["gpu_util"] = opt_stat(r.gpu_util);
  j["gpu_power_w"] = opt_stat(r.gpu_power_w);
  j["rtf"] = r.rtf;
  j["flow_success_rate"] = opt(r.flow_success_rate);
  j["complete_flows"] = r.complete_flows;
  j["lambda_tb"] = opt(r.lambda_tb);
  j["du_core_budget_pct"] = r.du_core_budget_pct;
  j["cu_core_budget_pct"] = r.cu_core_budget_pct;
  if (r.telemetry) {
    const auto& t = *r.telemetry;
    j["telemetry"] = {{"mean_messages_per_tick", t.mean_messages_per_tick},
                      {"tick_count", t.tick_count},
                      {"ever_active", t.ever_active},
                      {"stalled", t.stalled},
                      {"stall_start_epoch_ms", opt(t.stall_start_epoch_ms)},
                      {"longest_silence_s", t.longest_silence_s}};
  } else {
    j["telemetry"] = nullptr;
  }
  return j;
}

json diagnosis_json(const Diagnosis& d) {
  json ev = json::array();
  for (const auto& e : d.evidence) {
    json values = json::array();
    for (const auto& [k, v] : e.supporting_values) values.push_back(json::array({k, v}));
    ev.push_back({{"kind", std::string(to_string(e.kind))}, {"detail", e.detail}, {"supporting_values", values}});
  }
  return {{"verdict", std::string(to_string(d.verdict))}, {"evidence", ev}, {"data_quality_notes", d.data_quality_notes}};
}

json thresholds_json(const ThresholdConfig& t) {
  return {{"fairness_floor", t.fairness_floor},
          {"util_trend_tolerance", t.util_trend_tolerance},
          {"rtf_dilation_ceiling", t.rtf_dilation_ceiling},
          {"budget_saturation_fraction", t.budget_saturation_fraction},
          {"stall_window_s", t.stall_window_s},
          {"t_cum_stability_band", t.t_cum_stability_band}};
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

AggregateStat stat_from(const json& j) {
  return {j.at("mean").get<double>(), j.at("p95").get<double>(), j.at("sample_count").get<std::int64_t>()};
}

std::optional<AggregateStat> opt_stat_from(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return stat_from(v);
}

KpiRow row_from(const json& j, StackId stack) {
  KpiRow r;
  r.stack_id = stack;
  r.ue_count = j.at("ue_count").get<std::int64_t>();
  r.t_total_mbps = get_opt<double>(j, "t_total_mbps");
  r.t_per_ue_mbps = get_opt<double>(j, "t_per_ue_mbps");
  r.jain_j = get_opt<double>(j, "jain_j");
  r.throughput_estimated = j.at("throughput_estimated").get<bool>();
  r.du_cpu = stat_from(j.at("du_cpu"));
  r.cu_cpu = stat_from(j.at("cu_cpu"));
  r.sys_cpu = stat_from(j.at("sys_cpu"));
  r.ldpc_per_call_us = opt_stat_from(j, "ldpc_per_call_us");
  r.ldpc_cum_us = opt_stat_from(j, "ldpc_cum_us");
  r.segments_per_call = get_opt<double>(j, "segments_per_call");
  r.gpu_util = opt_stat_from(j, "gpu_util");
  r.gpu_power_w = opt_stat_from(j, "gpu_power_w");
  r.rtf = j.at("rtf").get<double>();
  r.flow_success_rate = get_opt<double>(j, "flow_success_rate");
  r.complete_flows = j.at("complete_flows").get<std::int64_t>();
  r.lambda_tb = get_opt<double>(j, "lambda_tb");
  r.du_core_budget_pct = j.at("du_core_budget_pct").get<double>();
  r.cu_core_budget_pct = j.at("cu_core_budget_pct").get<double>();
  if (const auto& t = j.at("telemetry"); !t.is_null()) {
    TelemetrySummary s;
    s.mean_messages_per_tick = t.at("mean_messages_per_tick").get<double>();
    s.tick_count = t.at("tick_count").get<std::int64_t>();
    s.ever_active = t.at("ever_active").get<bool>();
    s.stalled = t.at("stalled").get<bool>();
    s.stall_start_epoch_ms = get_opt<std::int64_t>(t, "stall_start_epoch_ms");
    s.longest_silence_s = t.at("longest_silence_s").get<double>();
    r.telemetry = s;
  }
  return r;
}

Diagnosis diagnosis_from(const json& j, StackId stack) {
  Diagnosis d;
  d.stack_id = stack;
  d.verdict = parse_verdict(j.at("verdict").get<std::string>());
  for (const auto& e : j.at("evidence")) {
    Evidence ev;
    ev.kind = parse_evidence_kind(e.at("kind").get<std::string>());
    ev.detail = e.at("detail").get<std::string>();
    for (const auto& kv : e.at("supporting_values")) {
      ev.supporting_values.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<double>());
    }
    d.evidence.push_back(std::move(ev));
  }
  d.data_quality_notes = j.at("data_quality_notes").get<std::vector<std::string>>();
  return d;
}

// ---- text ----

class TextTable {
 public:
  explicit TextTable(std::vector<std::string> headers) : headers_(std::move(headers)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width(headers_.size());
    for (std::size_t c = 0; c < headers_.size(); ++c) {
      width[c] = headers_[c].size();
      for (const auto& r : rows_) width[c] = std::max(width[c], r[c].size());
    }
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
      std::string l;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c > 0) l += "  ";
        l += fmt::format("{:>{}}", cells[c], width[c]);
      }
      out += l + "\n";
    };
    line(headers_);
    std::size_t total = 0;
    for (auto w : width) total += w;
    out += std::string(total + 2 * (width.size() - 1), '-') + "\n";
    for (const auto& r : rows_) line(r);
    return out;
  }

 private:
  std::vector<std::string> headers_;
  std::vector<std::vector<std::string>> rows_;
};

std::string fix(double v, int decimals = 2) { return fmt::format("{:.{}f}", v, decimals); }
std::string na_or(const std::optional<double>& v, int decimals = 2) { return v ? fix(*v, decimals) : "NA"; }
std::string pair_cell(const AggregateStat& s) { return fmt::format("{:.2f}/{:.2f}", s.mean, s.p95); }
std::string pair_cell(const std::optional<AggregateStat>& s) { return s ? pair_cell(*s) : "NA"; }

std::string stack_table(const StackReport& s) {
  TextTable t({"N", "T_total", "T_per-UE", "Jain J", "DU CPU", "CU CPU", "SYS CPU", "LDPC/thread", "LDPC cum",
               "seg/call", "GPU util", "GPU W", "RTF", "flows ok", "lambda_TB", "telem/tick", "stall"});
  bool estimated = false;
  for (const auto& r : s.rows) {
    std::string total = na_or(r.t_total_mbps);
    if (r.throughput_estimated) {
      total += "*";
      estimated = true;
    }
    std::string flows = "NA";
    if (r.flow_success_rate) flows = fmt::format("{}/{} ({:.3f})", r.complete_flows, r.ue_count, *r.flow_success_rate);
    std::string telem = "NA";
    std::string stall = "NA";
    if (r.telemetry) {
      telem = fix(r.telemetry->mean_messages_per_tick);
      stall = r.telemetry->stalled ? fmt::format("yes ({:.2f} s)", r.telemetry->longest_silence_s) : "no";
    }
    t.add({std::to_string(r.ue_count), total, na_or(r.t_per_ue_mbps), na_or(r.jain_j, 6), pair_cell(r.du_cpu),
           pair_cell(r.cu_cpu), pair_cell(r.sys_cpu), pair_cell(r.ldpc_per_call_us), pair_cell(r.ldpc_cum_us),
           na_or(r.segments_per_call), pair_cell(r.gpu_util), pair_cell(r.gpu_power_w), fix(r.rtf), flows,
           na_or(r.lambda_tb), telem, stall});
  }
  std::string out = t.render();
  if (estimated) out += "* includes goodput estimated from partial flow reports\n";
  if (!s.rows.empty()) {
    out += fmt::format("core budgets: DU {:.2f}%, CU {:.2f}%\n", s.rows.back().du_core_budget_pct,
                       s.rows.back().cu_core_budget_pct);
  }
  return out;
}

}  // namespace

const StackReport* StudyReport::find(StackId id) const {
  for (const auto& s : stacks) {
    if (s.stack_id == id) return &s;
  }
  return nullptr;
}

std::vector<fs::path> parse_study_manifest(std::string_view document, const fs::path& base_dir) {
  std::vector<fs::path> runs;
  const auto lines = text::read_lines(document);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = text::trim(lines[i]);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = text::trim(line.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos || text::trim(line.substr(0, eq)) != "run") {
      throw IngestError(fmt::format("study manifest line {}: expected run=<path>", i + 1));
    }
    const auto value = text::trim(line.substr(eq + 1));
    if (value.empty()) throw IngestError(fmt::format("study manifest line {}: empty run path", i + 1));
    fs::path p{std::string(value)};
    runs.push_back(p.is_absolute() ? p : base_dir / p);
  }
  if (runs.empty()) throw IngestError("study manifest lists no runs");
  return runs;
}

std::size_t resolve_thread_count(std::size_t requested, std::size_t jobs) {
  std::size_t threads = requested > 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RAN_FORENSICS_THREADS"); env && *env) {
    const auto cap = text::parse_int(env);
    if (!cap || *cap < 1) throw ReportError(fmt::format("RAN_FORENSICS_THREADS must be a positive integer, got '{}'", env));
    threads = std::min(threads, static_cast<std::size_t>(*cap));
  }
  return std::max<std::size_t>(1, std::min(threads, jobs));
}

StudyReport build_report(const std::vector<RunBundle>& bundles, const AnalyzeOptions& options) {
  options.thresholds.validate();
  if (bundles.empty()) throw ReportError("no runs to analyze");
  std::vector<RunResult> results(bundles.size());
  std::vector<std::int64_t> r_raw(bundles.size());
  parallel_for(bundles.size(), resolve_thread_count(options.max_threads, bundles.size()), [&](std::size_t i) {
    results[i] = analyze_bundle(bundles[i], options);
    r_raw[i] = raw_ul_bound(bundles[i].manifest.phy);
  });
  return assemble(std::move(results), r_raw, options);
}

StudyReport analyze_study(const fs::path& study_manifest, const AnalyzeOptions& options) {
  options.thresholds.validate();
  const auto runs = parse_study_manifest(read_file(study_manifest), study_manifest.parent_path());
  std::vector<RunResult> results(runs.size());
  std::vector<std::int64_t> r_raw(runs.size());
  parallel_for(runs.size(), resolve_thread_count(options.max_threads, runs.size()), [&](std::size_t i) {
    RunBundle bundle;
    try {
      bundle = load_run_bundle(runs[i]);
    } catch (const Error& e) {
      throw Error(e.module(), fmt::format("{}: {}", runs[i].string(), e.detail()));
    }
    results[i] = analyze_bundle(bundle, options);
    r_raw[i] = raw_ul_bound(bundle.manifest.phy);
  });
  return assemble(std::move(results), r_raw, options);
}

ReportFormat parse_report_format(std::string_view s) {
  if (s == "text") return ReportFormat::Text;
  if (s == "json") return ReportFormat::Json;
  if (s == "csv-plot") return ReportFormat::CsvPlot;
  throw ReportError(fmt::format("unknown report format '{}' (expected text, json or csv-plot)", s));
}

std::string render_json(const StudyReport& report) {
  json doc;
  doc["schema"] = kReportSchema;
  doc["analysis"] = {{"head_trim_s", report.head_trim_s}, {"tail_trim_s", report.tail_trim_s}};
  doc["thresholds"] = thresholds_json(report.thresholds);
  doc["notes"] = report.notes;
  json stacks = json::array();
  for (const auto& s : report.stacks) {
    json js;
    js["stack_id"] = std::string(to_string(s.stack_id));
    js["r_raw_bps"] = s.r_raw_bps;
    js["efficiency"] = opt(s.efficiency);
    if (s.collapse_ratio) {
      js["collapse"] = {{"ratio", *s.collapse_ratio}, {"from_n", s.collapse_from_n}, {"to_n", s.collapse_to_n}};
    } else {
      js["collapse"] = nullptr;
    }
    js["energy_proxy_w_per_mbps"] = {{"first", opt(s.energy_proxy_first)}, {"last", opt(s.energy_proxy_last)}};
    if (s.fit) {
      js["fit"] = {{"a", s.fit->a}, {"b", s.fit->b}, {"r2_log", s.fit->r2_log}};
    } else {
      js["fit"] = nullptr;
    }
    js["diagnosis"] = diagnosis_json(s.diagnosis);
    json rows = json::array();
    for (const auto& r : s.rows) rows.push_back(row_json(r));
    js["rows"] = std::move(rows);
    stacks.push_back(std::move(js));
  }
  doc["stacks"] = std::move(stacks);
  return doc.dump(2) + "\n";
}

StudyReport parse_report_json(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ReportError(fmt::format("report is not valid JSON: {}", e.what()));
  }
  try {
    if (doc.at("schema").get<std::string>() != kReportSchema) {
      throw ReportError(fmt::format("unsupported report schema '{}'", doc.at("schema").get<std::string>()));
    }
    StudyReport report;
    report.head_trim_s = doc.at("analysis").at("head_trim_s").get<double>();
    report.tail_trim_s = doc.at("analysis").at("tail_trim_s").get<double>();
    const auto& t = doc.at("thresholds");
    report.thresholds.fairness_floor = t.at("fairness_floor").get<double>();
    report.thresholds.util_trend_tolerance = t.at("util_trend_tolerance").get<double>();
    report.thresholds.rtf_dilation_ceiling = t.at("rtf_dilation_ceiling").get<double>();
    report.thresholds.budget_saturation_fraction = t.at("budget_saturation_fraction").get<double>();
    report.thresholds.stall_window_s = t.at("stall_window_s").get<double>();
    report.thresholds.t_cum_stability_band = t.at("t_cum_stability_band").get<double>();
    report.notes = doc.at("notes").get<std::vector<std::string>>();
    for (const auto& js : doc.at("stacks")) {
      StackReport s;
      s.stack_id = parse_stack_id(js.at("stack_id").get<std::string>());
      s.r_raw_bps = js.at("r_raw_bps").get<std::int64_t>();
      s.efficiency = get_opt<double>(js, "efficiency");
      if (const auto& c = js.at("collapse"); !c.is_null()) {
        s.collapse_ratio = c.at("ratio").get<double>();
        s.collapse_from_n = c.at("from_n").get<std::int64_t>();
        s.collapse_to_n = c.at("to_n").get<std::int64_t>();
      }
      s.energy_proxy_first = get_opt<double>(js.at("energy_proxy_w_per_mbps"), "first");
      s.energy_proxy_last = get_opt<double>(js.at("energy_proxy_w_per_mbps"), "last");
      if (const auto& f = js.at("fit"); !f.is_null()) {
        s.fit = PowerLawFit{f.at("a").get<double>(), f.at("b").get<double>(), f.at("r2_log").get<double>()};
      }
      s.diagnosis = diagnosis_from(js.at("diagnosis"), s.stack_id);
      for (const auto& r : js.at("rows")) s.rows.push_back(row_from(r, s.stack_id));
      report.stacks.push_back(std::move(s));
    }
    return report;
  } catch (const json::exception& e) {
    throw ReportError(fmt::format("report field error: {}", e.what()));
  }
}

std::string render_text(const StudyReport& report) {
  std::string out = "Core KPIs (mean/p95 over the steady-state window)\n";
  out += fmt::format("window: head trim {:.2f} s, tail trim {:.2f} s\n", report.head_trim_s, report.tail_trim_s);
  for (const auto& s : report.stacks) {
    out += fmt::format("\n[{}]\n", to_string(s.stack_id));
    out += stack_table(s);
  }

  out += "\nDerived constants and fitted models\n";
  TextTable derived({"quantity", "stack", "value"});
  for (const auto& s : report.stacks) {
    const auto id = std::string(to_string(s.stack_id));
    derived.add({"raw UL payload bound", id, fmt::format("{:.2f} Mbps", static_cast<double>(s.r_raw_bps) / 1e6)});
    derived.add({"efficiency at N=1", id, na_or(s.efficiency)});
    derived.add({"power-law fit", id,
                 s.fit ? fmt::format("T(N) = {:.2f} * N^{:.4f} (R2_log {:.4f})", s.fit->a, s.fit->b, s.fit->r2_log)
                       : "NA"});
    derived.add({"collapse", id,
                 s.collapse_ratio
                     ? fmt::format("{:.2f}x (N={} -> N={})", *s.collapse_ratio, s.collapse_from_n, s.collapse_to_n)
                     : "NA"});
    derived.add({"GPU energy proxy (W/Mbps)", id,
                 fmt::format("{} -> {}", na_or(s.energy_proxy_first), na_or(s.energy_proxy_last))});
  }
  out += derived.render();

  out += "\nDiagnosis\n";
  for (const auto& s : report.stacks) {
    out += fmt::format("{}: {}\n", to_string(s.stack_id), to_string(s.diagnosis.verdict));
    for (const auto& e : s.diagnosis.evidence) {
      out += fmt::format("  - {}: {}\n", to_string(e.kind), e.detail);
      if (!e.supporting_values.empty()) {
        std::string values;
        for (const auto& [k, v] : e.supporting_values) {
          if (!values.empty()) values += ", ";
          values += fmt::format("{}={}", k, text::format_double(v));
        }
        out += fmt::format("      {}\n", values);
      }
    }
    for (const auto& n : s.diagnosis.data_quality_notes) out += fmt::format("  note: {}\n", n);
  }

  const auto& t = report.thresholds;
  out += "\nThresholds\n";
  out += fmt::format("  fairness_floor = {}\n", text::format_double(t.fairness_floor));
  out += fmt::format("  util_trend_tolerance = {}\n", text::format_double(t.util_trend_tolerance));
  out += fmt::format("  rtf_dilation_ceiling = {}\n", text::format_double(t.rtf_dilation_ceiling));
  out += fmt::format("  budget_saturation_fraction = {}\n", text::format_double(t.budget_saturation_fraction));
  out += fmt::format("  stall_window_s = {}\n", text::format_double(t.stall_window_s));
  out += fmt::format("  t_cum_stability_band = {}\n", text::format_double(t.t_cum_stability_band));
  out += "  (toolkit defaults unless overridden)\n";

  if (!report.notes.empty()) {
    out += "\nNotes\n";
    for (const auto& n : report.notes) out += fmt::format("  - {}\n", n);
  }
  return out;
}

std::string render_csv_plot(const StackReport& stack, std::size_t curve_samples) {
  std::string out = "n,t_measured,t_fitted\n";
  double n_max = 1.0;
  for (const auto& r : stack.rows) {
    if (r.ue_count < 1 || !r.t_total_mbps) continue;
    const auto n = static_cast<double>(r.ue_count);
    n_max = std::max(n_max, n);
    out += fmt::format("{},{},{}\n", r.ue_count, text::format_double(*r.t_total_mbps),
                       stack.fit ? text::format_double(predict(*stack.fit, n)) : "");
  }
  if (stack.fit && curve_samples >= 2) {
    // Log-spaced samples from N=1 to the largest measured N.
    for (std::size_t i = 0; i < curve_samples; ++i) {
      const double n = std::exp(std::log(n_max) * static_cast<double>(i) / static_cast<double>(curve_samples - 1));
      out += fmt::format("{},,{}\n", text::format_double(n), text::format_double(predict(*stack.fit, n)));
    }
  }
  return out;
}

std::vector<RenderedDocument> render_report(const StudyReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Text:
      return {{"report.txt", render_text(report)}};
    case ReportFormat::Json:
      return {{"report.json", render_json(report)}};
    case ReportFormat::CsvPlot: {
      std::vector<RenderedDocument> docs;
      for (const auto& s : report.stacks) {
        docs.push_back({fmt::format("plot_{}.csv", text::to_lower(to_string(s.stack_id))), render_csv_plot(s)});
      }
      return docs;
    }
  }
  throw ReportError("unknown report format");
}

std::vector<fs::path> write_report_files(const StudyReport& report, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw ReportError(fmt::format("cannot create {}: {}", out_dir.string(), ec.message()));
  std::vector<fs::path> written;
  for (const auto format : {ReportFormat::Text, ReportFormat::Json, ReportFormat::CsvPlot}) {
    for (const auto& doc : render_report(report, format)) {
      const auto path = out_dir / doc.filename;
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      out << doc.content;
      if (!out) throw ReportError(fmt::format("cannot write {}", path.string()));
      written.push_back(path);
    }
  }
  return written;
}

}  // namespace ranforensics
