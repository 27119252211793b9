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

#include "ranforensics/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>

#include <fmt/format.h>

#include "json.hpp"
#include "ranforensics/error.hpp"
#include "ranforensics/text.hpp"

namespace ranforensics {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kBaseStackClockS = 532641.987492;
constexpr std::int64_t kMarkerPeriodMs = 100;
constexpr std::int64_t kLdpcPeriodMs = 1000;

std::int64_t to_ms(double s) { return static_cast<std::int64_t>(std::llround(s * 1000.0)); }

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw SynthError(fmt::format("cannot write {}", path.string()));
  out << content;
  if (!out) throw SynthError(fmt::format("failed writing {}", path.string()));
}

// Multiplicative noise, redrawn until non-negative.
class Noise {
 public:
  Noise(std::uint64_t seed, StackId stack, std::int64_t n, int series, double rel_sigma)
      : rel_sigma_(rel_sigma) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stack), static_cast<std::uint32_t>(n),
                      static_cast<std::uint32_t>(series)};
    rng_.seed(seq);
  }

  double apply(double v) {
    if (rel_sigma_ <= 0.0 || v == 0.0) return v;
    while (true) {
      const double sample = v * (1.0 + rel_sigma_ * normal_(rng_));
      if (sample >= 0.0) return sample;
    }
  }

 private:
  double rel_sigma_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

std::string fmt_num(double v) { return text::format_double(v); }

std::vector<double> noisy(std::vector<double> series, Noise noise) {
  for (auto& v : series) v = noise.apply(v);
  return series;
}

void validate_series(const SeriesModel& m, const char* name) {
  if (m.mean < 0) throw SynthError(fmt::format("{} mean must be non-negative", name));
  if (m.p95 && *m.p95 < m.mean) throw SynthError(fmt::format("{} p95 below its mean cannot be shaped", name));
}

std::string du_log_text(const RunTruth& truth) {
  const auto& m = truth.manifest;
  const auto& model = truth.model;
  const std::int64_t start = *m.start_epoch_ms;
  const std::int64_t duration_ms = to_ms(m.run_duration_s);
  const std::string tag = "oai-nr-du";
  const std::int64_t per_frame = m.phy.slots_per_frame();
  const std::int64_t hyperframe = 1024 * per_frame;

  struct Line {
    std::int64_t epoch;
    std::string body;
  };
  std::vector<Line> lines;
  auto header = [&](std::int64_t epoch) {
    const double clock = kBaseStackClockS + static_cast<double>(epoch - start) / 1000.0;
    return fmt::format("{}\t{}\t{:.6f} ", epoch, tag, clock);
  };

  // Slot markers advance rtf * f_slot slots per wall second.
  const std::int64_t first_index = 768 * per_frame;
  for (std::int64_t t = 0; t < duration_ms; t += kMarkerPeriodMs) {
    const auto advanced = static_cast<std::int64_t>(
        std::llround(model.rtf * static_cast<double>(m.phy.f_slot) * static_cast<double>(t) / 1000.0));
    const std::int64_t index = (first_index + advanced) % hyperframe;
    lines.push_back({start + t, header(start + t) + fmt::format("[NR_MAC] I Frame.Slot {}.{}", index / per_frame,
                                                                index % per_frame)});
  }

  if (model.ldpc_per_call_us) {
    const auto count = static_cast<std::size_t>(duration_ms / kLdpcPeriodMs);
    auto calls = noisy(shaped_series(*model.ldpc_per_call_us, count, kLdpcPeriodMs / 1000.0, truth.shaping_head_s,
                                     m.run_duration_s, truth.shaping_tail_s),
                       Noise(truth.noise_seed, m.stack_id, m.ue_count, 10, truth.noise_rel_sigma));
    const std::string decoder = m.stack_id == StackId::SRK ? "CUDA" : "CPU";
    for (std::size_t j = 0; j < count; ++j) {
      const std::int64_t epoch = start + static_cast<std::int64_t>(j) * kLdpcPeriodMs + 43;
      const double per_seg = calls[j] / model.segments_per_call;
      lines.push_back({epoch, header(epoch) + fmt::format("[NR_PHY] I {} LDPC decoder:   {} us (  {} us / seg)",
                                                          decoder, fmt_num(calls[j]), fmt_num(per_seg))});
    }
  }

  // Unrelated subsystems the parser must carry through as Other.
  for (std::int64_t t = 2500; t < duration_ms; t += 5000) {
    lines.push_back({start + t, header(start + t) + "[GTPU] I tunnel keepalive"});
    lines.push_back({start + t, header(start + t) + fmt::format("[NR_MAC] I UE count {}", m.ue_count)});
  }

  std::stable_sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.epoch < b.epoch; });
  std::string out;
  for (const auto& l : lines) {
    out += l.body;
    out += '\n';
  }
  return out;
}

std::string flow_json(double goodput_bps, bool complete, double duration_s, double partial_s) {
  json doc;
  doc["start"] = {{"test_start", {{"protocol", "TCP"}, {"num_streams", 1}, {"duration", duration_s}}}};
  const auto seconds = static_cast<std::int64_t>(std::floor(complete ? duration_s : partial_s));
  json intervals = json::array();
  for (std::int64_t i = 0; i < seconds; ++i) {
    const double bytes = goodput_bps / 8.0;
    intervals.push_back({{"sum",
                          {{"start", static_cast<double>(i)},
                           {"end", static_cast<double>(i + 1)},
                           {"seconds", 1.0},
                           {"bytes", bytes},
                           {"bits_per_second", goodput_bps}}}});
  }
  doc["intervals"] = std::move(intervals);
  if (complete) {
    doc["end"] = {{"sum_received",
                   {{"start", 0.0},
                    {"end", duration_s},
                    {"seconds", duration_s},
                    {"bytes", goodput_bps * duration_s / 8.0},
                    {"bits_per_second", goodput_bps}}}};
  }
  return doc.dump(1) + "\n";
}

SeriesModel series_from_json(const json& j, const char* name) {
  SeriesModel m;
  if (j.is_number()) {
    m.mean = j.get<double>();
  } else if (j.is_object() && j.contains("mean")) {
    m.mean = j.at("mean").get<double>();
    if (j.contains("p95")) m.p95 = j.at("p95").get<double>();
  } else {
    throw SynthError(fmt::format("series '{}' must be a number or {{mean, p95}}", name));
  }
  return m;
}

}  // namespace

std::string run_dir_name(StackId stack, std::int64_t ue_count) {
  return fmt::format("{}_n{}", text::to_lower(to_string(stack)), ue_count);
}

std::vector<double> jain_target_weights(std::int64_t n, double target) {
  if (n < 1) throw SynthError("jain target needs at least one UE");
  if (!(target > 0 && target <= 1)) throw SynthError("jain target must lie in (0, 1]");
  std::vector<double> w(static_cast<std::size_t>(n), 1.0);
  if (n == 1 || target == 1.0) return w;
  // Weights {1 + d, 1 - d/(n-1), ...} give J = 1 / (1 + d^2 / (n-1)).
  const double nm1 = static_cast<double>(n - 1);
  const double d = std::sqrt(nm1 * (1.0 / target - 1.0));
  if (d > nm1) throw SynthError(fmt::format("jain target {} unreachable with {} UEs", target, n));
  w[0] = 1.0 + d;
  for (std::size_t i = 1; i < w.size(); ++i) w[i] = 1.0 - d / nm1;
  return w;
}

std::vector<double> shaped_series(const SeriesModel& model, std::size_t count, double interval_s, double head_s,
                                  double duration_s, double tail_s) {
  std::vector<double> out(count, model.mean);
  if (!model.p95 || *model.p95 == model.mean) return out;
  const std::int64_t lo = to_ms(head_s);
  const std::int64_t hi = to_ms(duration_s) - to_ms(tail_s);
  std::vector<std::size_t> inside;
  for (std::size_t i = 0; i < count; ++i) {
    const auto t = to_ms(static_cast<double>(i) * interval_s);
    if (t >= lo && t < hi) inside.push_back(i);
  }
  const std::size_t n = inside.size();
  if (n < 2) return out;
  const std::size_t rank = (95 * n + 99) / 100;
  const std::size_t k = n - rank + 1;
  if (k >= n) return out;
  const double p95 = *model.p95;
  const double low = (static_cast<double>(n) * model.mean - static_cast<double>(k) * p95) / static_cast<double>(n - k);
  if (low < 0) throw SynthError("p95 too far above the mean to shape a non-negative series");
  for (std::size_t j = 0; j < n; ++j) {
    const bool high = ((j + 1) * k) / n > (j * k) / n;
    out[inside[j]] = high ? p95 : low;
  }
  return out;
}

std::vector<RunTruth> expand(const GroundTruth& truth) {
  if (truth.runs.empty()) throw SynthError("ground truth declares no runs");
  if (!(truth.noise_rel_sigma >= 0)) throw SynthError("noise sigma must be non-negative");
  std::vector<RunTruth> out;
  std::set<std::int64_t> seen;
  std::int64_t prev = -1;
  for (const auto& run : truth.runs) {
    if (!seen.insert(run.ue_count).second) {
      throw SynthError(fmt::format("duplicate run ({}, N={})", to_string(truth.stack_id), run.ue_count));
    }
    if (run.ue_count <= prev) throw SynthError("runs must be sorted by UE count");
    prev = run.ue_count;

    RunTruth rt;
    auto& m = rt.manifest;
    m.stack_id = truth.stack_id;
    m.ue_count = run.ue_count;
    m.run_duration_s = truth.run_duration_s;
    m.cu_cores = truth.cu_cores;
    m.du_cores = truth.du_cores;
    m.host_core_count = truth.host_core_count;
    m.phy = truth.phy;
    m.sample_interval_s = truth.sample_interval_s;
    m.start_epoch_ms = truth.start_epoch_ms;
    m.validate();

    validate_series(run.du_cpu, "du_cpu");
    validate_series(run.cu_cpu, "cu_cpu");
    validate_series(run.sys_cpu, "sys_cpu");
    if (run.gpu_util) validate_series(*run.gpu_util, "gpu_util");
    if (run.gpu_power_w) validate_series(*run.gpu_power_w, "gpu_power_w");
    if (run.ldpc_per_call_us) validate_series(*run.ldpc_per_call_us, "ldpc_per_call_us");
    if (!(run.rtf > 0) || run.rtf > 50) throw SynthError("rtf must lie in (0, 50]");
    if (!(run.segments_per_call >= 1)) throw SynthError("segments_per_call must be at least 1");
    if (!run.flow_complete.empty() && static_cast<std::int64_t>(run.flow_complete.size()) != run.ue_count) {
      throw SynthError(fmt::format("flow_complete lists {} UEs for N={}", run.flow_complete.size(), run.ue_count));
    }

    rt.model = run;
    if (rt.model.flow_complete.empty()) rt.model.flow_complete.assign(static_cast<std::size_t>(run.ue_count), true);
    rt.noise_seed = truth.noise_seed;
    rt.noise_rel_sigma = truth.noise_rel_sigma;
    rt.shaping_head_s = truth.shaping_head_s;
    rt.shaping_tail_s = truth.shaping_tail_s;
    rt.partial_coverage_s = truth.partial_coverage_s.value_or(truth.run_duration_s / 2.0);

    if (run.ue_count > 0) {
      double total_mbps = 0.0;
      if (const auto* listed = std::get_if<std::map<std::int64_t, double>>(&truth.goodput_mbps)) {
        const auto it = listed->find(run.ue_count);
        if (it == listed->end()) throw SynthError(fmt::format("no goodput declared for N={}", run.ue_count));
        total_mbps = it->second;
      } else {
        const auto& pl = std::get<PowerLawModel>(truth.goodput_mbps);
        total_mbps = pl.a * std::pow(static_cast<double>(run.ue_count), pl.b);
      }
      if (!(total_mbps > 0)) throw SynthError("goodput must be positive");

      std::vector<double> weights(static_cast<std::size_t>(run.ue_count), 1.0);
      if (const auto* ws = std::get_if<WeightSplit>(&truth.split)) {
        if (const auto it = ws->weights.find(run.ue_count); it != ws->weights.end()) weights = it->second;
      } else if (const auto* js = std::get_if<JainTargetSplit>(&truth.split)) {
        if (const auto it = js->target.find(run.ue_count); it != js->target.end()) {
          weights = jain_target_weights(run.ue_count, it->second);
        }
      }
      if (static_cast<std::int64_t>(weights.size()) != run.ue_count) {
        throw SynthError(fmt::format("split weights for N={} have the wrong length", run.ue_count));
      }
      double wsum = 0.0;
      for (double w : weights) {
        if (w < 0) throw SynthError("split weights must be non-negative");
        wsum += w;
      }
      if (!(wsum > 0)) throw SynthError("split weights sum to zero");
      for (double w : weights) rt.per_ue_goodput_bps.push_back(total_mbps * 1e6 * w / wsum);
    }
    out.push_back(std::move(rt));
  }
  return out;
}

fs::path generate_bundle_files(const RunTruth& truth, const fs::path& output_dir) {
  std::error_code ec;
  fs::create_directories(output_dir / "flows", ec);
  if (ec) throw SynthError(fmt::format("cannot create {}: {}", output_dir.string(), ec.message()));

  RunManifest m = truth.manifest;
  if (!m.start_epoch_ms) throw SynthError("run truth needs a start epoch");
  const auto& model = truth.model;
  const std::int64_t start = *m.start_epoch_ms;
  const auto count = static_cast<std::size_t>(std::floor(m.run_duration_s / m.sample_interval_s + 1e-9));
  auto series = [&](const SeriesModel& s, int id) {
    return noisy(shaped_series(s, count, m.sample_interval_s, truth.shaping_head_s, m.run_duration_s,
                               truth.shaping_tail_s),
                 Noise(truth.noise_seed, m.stack_id, m.ue_count, id, truth.noise_rel_sigma));
  };
  auto epoch_at = [&](std::size_t i) { return start + to_ms(static_cast<double>(i) * m.sample_interval_s); };

  m.artifact_paths.clear();
  m.artifact_paths["du_log"] = "du_logs.tsv";
  m.artifact_paths["flows_dir"] = "flows";
  m.artifact_paths["cpu_samples"] = "cpu_samples.csv";

  write_file(output_dir / "du_logs.tsv", du_log_text(truth));

  {
    const auto cu = series(model.cu_cpu, 1);
    const auto du = series(model.du_cpu, 2);
    const auto sys = series(model.sys_cpu, 3);
    std::string csv = std::string(kCpuSamplesHeader) + "\n";
    const auto host_cores = static_cast<double>(m.host_core_count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto t = epoch_at(i);
      csv += fmt::format("{},cu,{}\n{},du,{}\n{},host,{}\n", t, fmt_num(cu[i]), t, fmt_num(du[i]), t,
                         fmt_num(sys[i] / host_cores));
    }
    write_file(output_dir / "cpu_samples.csv", csv);
  }

  if (model.gpu_util || model.gpu_power_w) {
    std::vector<double> util, power;
    if (model.gpu_util) util = series(*model.gpu_util, 4);
    if (model.gpu_power_w) power = series(*model.gpu_power_w, 5);
    std::string csv = std::string(kGpuSamplesHeader) + "\n";
    for (std::size_t i = 0; i < count; ++i) {
      csv += fmt::format("{},gpu,{},{}\n", epoch_at(i), util.empty() ? "" : fmt_num(util[i]),
                         power.empty() ? "" : fmt_num(power[i]));
    }
    write_file(output_dir / "gpu_samples.csv", csv);
    m.artifact_paths["gpu_samples"] = "gpu_samples.csv";
  }

  if (model.telemetry) {
    const auto& tm = *model.telemetry;
    if (!(tm.tick_s > 0) || tm.messages_per_tick < 0) throw SynthError("telemetry model is invalid");
    std::string csv = std::string(kTelemetryHeader) + "\n";
    const std::int64_t tick_ms = to_ms(tm.tick_s);
    const std::int64_t duration_ms = to_ms(m.run_duration_s);
    for (std::int64_t t = 0; t < duration_ms; t += tick_ms) {
      const bool silent = tm.stall_at_s && t >= to_ms(*tm.stall_at_s);
      const auto msgs = silent ? 0 : static_cast<std::int64_t>(std::llround(tm.messages_per_tick));
      csv += fmt::format("{},{}\n", start + t, msgs);
    }
    write_file(output_dir / "telemetry.csv", csv);
    m.artifact_paths["telemetry"] = "telemetry.csv";
  }

  for (std::size_t u = 0; u < truth.per_ue_goodput_bps.size(); ++u) {
    write_file(output_dir / "flows" / fmt::format("ue{:02}.json", u + 1),
               flow_json(truth.per_ue_goodput_bps[u], model.flow_complete[u], m.run_duration_s,
                         truth.partial_coverage_s));
  }

  const auto manifest_path = output_dir / "run.manifest";
  write_file(manifest_path, render_manifest(m));
  return manifest_path;
}

fs::path generate_study(const std::vector<GroundTruth>& stacks, const fs::path& output_dir) {
  if (stacks.empty()) throw SynthError("study needs at least one stack");
  std::set<StackId> stack_ids;
  std::vector<std::vector<RunTruth>> expanded;
  for (const auto& truth : stacks) {
    if (!stack_ids.insert(truth.stack_id).second) {
      throw SynthError(fmt::format("stack {} declared twice", to_string(truth.stack_id)));
    }
    if (truth.runs.size() < 2) throw SynthError("each stack needs at least two UE counts");
    expanded.push_back(expand(truth));
  }
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  if (ec) throw SynthError(fmt::format("cannot create {}: {}", output_dir.string(), ec.message()));
  std::string study = "# run manifests, relative to this file\n";
  for (const auto& runs : expanded) {
    for (const auto& rt : runs) {
      const auto name = run_dir_name(rt.manifest.stack_id, rt.manifest.ue_count);
      generate_bundle_files(rt, output_dir / name);
      study += fmt::format("run={}/run.manifest\n", name);
    }
  }
  const auto study_path = output_dir / "study.manifest";
  write_file(study_path, study);
  return study_path;
}

std::vector<GroundTruth> parse_scenario(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw SynthError(fmt::format("scenario is not valid JSON: {}", e.what()));
  }
  try {
    const auto seed = doc.value("seed", std::uint64_t{1});
    const auto sigma = doc.value("noise_rel_sigma", 0.0);
    if (!doc.contains("stacks") || !doc["stacks"].is_array()) throw SynthError("scenario needs a 'stacks' array");
    std::vector<GroundTruth> out;
    for (const auto& s : doc["stacks"]) {
      GroundTruth g;
      g.stack_id = parse_stack_id(s.at("stack_id").get<std::string>());
      g.noise_seed = s.value("seed", seed);
      g.noise_rel_sigma = s.value("noise_rel_sigma", sigma);
      g.run_duration_s = s.value("run_duration_s", g.run_duration_s);
      if (s.contains("cu_cores")) g.cu_cores = parse_core_list(s["cu_cores"].get<std::string>());
      if (s.contains("du_cores")) g.du_cores = parse_core_list(s["du_cores"].get<std::string>());
      g.host_core_count = s.value("host_core_count", g.host_core_count);
      g.sample_interval_s = s.value("sample_interval_s", g.sample_interval_s);
      g.start_epoch_ms = s.value("start_epoch_ms", g.start_epoch_ms);
      g.shaping_head_s = s.value("shaping_head_s", g.shaping_head_s);
      g.shaping_tail_s = s.value("shaping_tail_s", g.shaping_tail_s);
      if (s.contains("partial_coverage_s")) g.partial_coverage_s = s["partial_coverage_s"].get<double>();
      if (s.contains("phy")) {
        const auto& p = s["phy"];
        g.phy.n_prb = p.value("n_prb", g.phy.n_prb);
        g.phy.n_sc = p.value("n_sc", g.phy.n_sc);
        g.phy.n_sym = p.value("n_sym", g.phy.n_sym);
        g.phy.f_slot = p.value("f_slot", g.phy.f_slot);
        g.phy.q_m = p.value("q_m", g.phy.q_m);
        g.phy.n_ldpc_threads = p.value("n_ldpc_threads", g.phy.n_ldpc_threads);
      }
      const auto& gp = s.at("goodput");
      if (gp.contains("power_law")) {
        g.goodput_mbps = PowerLawModel{gp["power_law"].at("a").get<double>(), gp["power_law"].at("b").get<double>()};
      } else if (gp.contains("explicit_mbps")) {
        std::map<std::int64_t, double> listed;
        for (const auto& [k, v] : gp["explicit_mbps"].items()) {
          const auto n = text::parse_int(k);
          if (!n) throw SynthError(fmt::format("goodput key '{}' is not a UE count", k));
          listed[*n] = v.get<double>();
        }
        g.goodput_mbps = std::move(listed);
      } else {
        throw SynthError("goodput needs 'explicit_mbps' or 'power_law'");
      }
      if (s.contains("split")) {
        const auto& sp = s["split"];
        auto keyed = [](const json& obj, auto convert) {
          std::map<std::int64_t, decltype(convert(json{}))> m;
          for (const auto& [k, v] : obj.items()) {
            const auto n = text::parse_int(k);
            if (!n) throw SynthError(fmt::format("split key '{}' is not a UE count", k));
            m[*n] = convert(v);
          }
          return m;
        };
        if (sp.is_string() && sp.get<std::string>() == "equal") {
          g.split = EqualSplit{};
        } else if (sp.is_object() && sp.contains("weights")) {
          g.split = WeightSplit{keyed(sp["weights"], [](const json& v) { return v.get<std::vector<double>>(); })};
        } else if (sp.is_object() && sp.contains("target_jain")) {
          g.split = JainTargetSplit{keyed(sp["target_jain"], [](const json& v) { return v.get<double>(); })};
        } else {
          throw SynthError("split must be \"equal\", {weights} or {target_jain}");
        }
      }
      for (const auto& r : s.at("runs")) {
        RunModel run;
        run.ue_count = r.at("ue_count").get<std::int64_t>();
        run.du_cpu = series_from_json(r.at("du_cpu"), "du_cpu");
        run.cu_cpu = series_from_json(r.at("cu_cpu"), "cu_cpu");
        run.sys_cpu = series_from_json(r.at("sys_cpu"), "sys_cpu");
        if (r.contains("gpu_util")) run.gpu_util = series_from_json(r["gpu_util"], "gpu_util");
        if (r.contains("gpu_power_w")) run.gpu_power_w = series_from_json(r["gpu_power_w"], "gpu_power_w");
        if (r.contains("ldpc_per_call_us")) {
          run.ldpc_per_call_us = series_from_json(r["ldpc_per_call_us"], "ldpc_per_call_us");
        }
        run.segments_per_call = r.value("segments_per_call", run.segments_per_call);
        run.rtf = r.at("rtf").get<double>();
        if (r.contains("telemetry")) {
          TelemetryModel tm;
          const auto& t = r["telemetry"];
          tm.messages_per_tick = t.value("messages_per_tick", tm.messages_per_tick);
          tm.tick_s = t.value("tick_s", tm.tick_s);
          if (t.contains("stall_at_s")) tm.stall_at_s = t["stall_at_s"].get<double>();
          run.telemetry = tm;
        }
        if (r.contains("flow_complete")) {
          run.flow_complete = r["flow_complete"].get<std::vector<bool>>();
        } else if (r.contains("complete_flows")) {
          const auto k = r["complete_flows"].get<std::int64_t>();
          if (k < 0 || k > run.ue_count) throw SynthError("complete_flows out of range");
          run.flow_complete.assign(static_cast<std::size_t>(run.ue_count), false);
          std::fill_n(run.flow_complete.begin(), k, true);
        }
        g.runs.push_back(std::move(run));
      }
      out.push_back(std::move(g));
    }
    return out;
  } catch (const json::exception& e) {
    throw SynthError(fmt::format("scenario field error: {}", e.what()));
  }
}

}  // namespace ranforensics
