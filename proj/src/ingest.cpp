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

#include "ranforensics/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include <fmt/format.h>

#include "json.hpp"
#include "ranforensics/error.hpp"
#include "ranforensics/text.hpp"

namespace ranforensics {

namespace {

using nlohmann::json;

constexpr std::string_view kRequiredManifestKeys[] = {
    "stack_id",        "ue_count",  "run_duration_s", "cu_cores", "du_cores",
    "host_core_count", "n_prb",     "n_sc",           "n_sym",    "f_slot",
    "q_m",             "n_ldpc_threads", "sample_interval_s", "du_log",
    "flows_dir",       "cpu_samples"};

constexpr std::string_view kPathKeys[] = {"du_log", "flows_dir", "cpu_samples",
                                          "gpu_samples", "telemetry"};

std::int64_t require_int(const std::map<std::string, std::string>& kv,
                         const std::string& key) {
  const auto v = text::parse_int(kv.at(key));
  if (!v) throw IngestError(fmt::format("manifest key {} is not an integer: '{}'", key, kv.at(key)));
  return *v;
}

double require_double(const std::map<std::string, std::string>& kv,
                      const std::string& key) {
  const auto v = text::parse_double(kv.at(key));
  if (!v) throw IngestError(fmt::format("manifest key {} is not a number: '{}'", key, kv.at(key)));
  return *v;
}

const std::regex& ldpc_grammar() {
  static const std::regex re(
      R"(^(CPU|CUDA) LDPC decoder:\s*([0-9]*\.?[0-9]+)\s*us\s*\(\s*([0-9]*\.?[0-9]+)\s*us\s*/\s*seg\s*\)\s*$)",
      std::regex::optimize);
  return re;
}

// Text following the first `count` whitespace-delimited tokens.
std::string_view rest_after_tokens(std::string_view line, std::size_t count) {
  std::size_t i = 0;
  for (std::size_t t = 0; t < count; ++t) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
  }
  return text::trim(line.substr(std::min(i, line.size())));
}

std::optional<double> number_at(const json& j, std::initializer_list<const char*> path) {
  const json* node = &j;
  for (const char* key : path) {
    if (!node->is_object() || !node->contains(key)) return std::nullopt;
    node = &(*node)[key];
  }
  if (!node->is_number()) return std::nullopt;
  return node->get<double>();
}

}  // namespace

std::string_view to_string(StackId id) {
  switch (id) {
    case StackId::OAI: return "OAI";
    case StackId::SRK: return "SRK";
  }
  return "?";
}

StackId parse_stack_id(std::string_view s) {
  const auto lower = text::to_lower(text::trim(s));
  if (lower == "oai") return StackId::OAI;
  if (lower == "srk") return StackId::SRK;
  throw IngestError(fmt::format("unknown stack_id '{}' (expected OAI or SRK)", s));
}

std::string_view to_string(Subject s) {
  switch (s) {
    case Subject::CU: return "cu";
    case Subject::DU: return "du";
    case Subject::HOST: return "host";
    case Subject::GPU: return "gpu";
  }
  return "?";
}

void PhyConfig::validate() const {
  const std::pair<const char*, std::int64_t> fields[] = {
      {"n_prb", n_prb}, {"n_sc", n_sc},   {"n_sym", n_sym},
      {"f_slot", f_slot}, {"q_m", q_m}, {"n_ldpc_threads", n_ldpc_threads}};
  for (const auto& [name, value] : fields) {
    if (value <= 0) throw IngestError(fmt::format("phy field {} must be positive, got {}", name, value));
  }
  if (f_slot % 100 != 0) {
    throw IngestError(fmt::format("f_slot {} does not divide into 10 ms frames", f_slot));
  }
}

void RunManifest::validate() const {
  if (ue_count < 0) throw IngestError("ue_count must be non-negative");
  if (!(run_duration_s > 0)) throw IngestError("run_duration_s must be positive");
  if (!(sample_interval_s > 0)) throw IngestError("sample_interval_s must be positive");
  if (host_core_count <= 0) throw IngestError("host_core_count must be positive");
  for (int core : cu_cores) {
    if (du_cores.count(core)) {
      throw IngestError(fmt::format("cu_cores and du_cores overlap on core {}", core));
    }
  }
  if (tb_bits && !(*tb_bits > 0)) throw IngestError("tb_bits must be positive");
  phy.validate();
}

std::set<int> parse_core_list(std::string_view s) {
  std::set<int> cores;
  const auto body = text::trim(s);
  if (body.empty()) return cores;
  for (auto part : text::split(body, ',')) {
    part = text::trim(part);
    const auto dash = part.find('-');
    if (dash == std::string_view::npos) {
      const auto v = text::parse_int(part);
      if (!v || *v < 0) throw IngestError(fmt::format("bad core index '{}'", part));
      cores.insert(static_cast<int>(*v));
      continue;
    }
    const auto lo = text::parse_int(text::trim(part.substr(0, dash)));
    const auto hi = text::parse_int(text::trim(part.substr(dash + 1)));
    if (!lo || !hi || *lo < 0 || *hi < *lo) {
      throw IngestError(fmt::format("bad core range '{}'", part));
    }
    for (auto c = *lo; c <= *hi; ++c) cores.insert(static_cast<int>(c));
  }
  return cores;
}

std::string format_core_list(const std::set<int>& cores) {
  std::string out;
  auto it = cores.begin();
  while (it != cores.end()) {
    int lo = *it;
    int hi = lo;
    ++it;
    while (it != cores.end() && *it == hi + 1) {
      hi = *it;
      ++it;
    }
    if (!out.empty()) out += ',';
    out += lo == hi ? std::to_string(lo) : fmt::format("{}-{}", lo, hi);
  }
  return out;
}

RunManifest parse_manifest(std::string_view document,
                           const std::filesystem::path& base_dir) {
  std::map<std::string, std::string> kv;
  std::size_t line_no = 0;
  for (const auto& raw : text::read_lines(document)) {
    ++line_no;
    const auto line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw IngestError(fmt::format("manifest line {} is not key=value: '{}'", line_no, line));
    }
    kv[std::string(text::trim(line.substr(0, eq)))] = std::string(text::trim(line.substr(eq + 1)));
  }

  std::vector<std::string> missing;
  for (auto key : kRequiredManifestKeys) {
    if (!kv.count(std::string(key))) missing.emplace_back(key);
  }
  if (!missing.empty()) {
    throw IngestError(fmt::format("manifest missing required key(s): {}", fmt::join(missing, ", ")));
  }

  RunManifest m;
  m.stack_id = parse_stack_id(kv.at("stack_id"));
  m.ue_count = require_int(kv, "ue_count");
  m.run_duration_s = require_double(kv, "run_duration_s");
  m.cu_cores = parse_core_list(kv.at("cu_cores"));
  m.du_cores = parse_core_list(kv.at("du_cores"));
  m.host_core_count = require_int(kv, "host_core_count");
  m.phy.n_prb = require_int(kv, "n_prb");
  m.phy.n_sc = require_int(kv, "n_sc");
  m.phy.n_sym = require_int(kv, "n_sym");
  m.phy.f_slot = require_int(kv, "f_slot");
  m.phy.q_m = require_int(kv, "q_m");
  m.phy.n_ldpc_threads = require_int(kv, "n_ldpc_threads");
  m.sample_interval_s = require_double(kv, "sample_interval_s");
  if (kv.count("start_epoch_ms")) m.start_epoch_ms = require_int(kv, "start_epoch_ms");
  if (kv.count("tb_bits")) m.tb_bits = require_double(kv, "tb_bits");
  for (auto key : kPathKeys) {
    const auto it = kv.find(std::string(key));
    if (it == kv.end() || it->second.empty()) continue;
    std::filesystem::path p(it->second);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    m.artifact_paths[std::string(key)] = p;
  }
  m.validate();
  return m;
}

std::string render_manifest(const RunManifest& m) {
  std::string out;
  auto put = [&out](std::string_view key, const std::string& value) {
    out += fmt::format("{}={}\n", key, value);
  };
  put("stack_id", std::string(to_string(m.stack_id)));
  put("ue_count", std::to_string(m.ue_count));
  put("run_duration_s", text::format_double(m.run_duration_s));
  put("cu_cores", format_core_list(m.cu_cores));
  put("du_cores", format_core_list(m.du_cores));
  put("host_core_count", std::to_string(m.host_core_count));
  put("n_prb", std::to_string(m.phy.n_prb));
  put("n_sc", std::to_string(m.phy.n_sc));
  put("n_sym", std::to_string(m.phy.n_sym));
  put("f_slot", std::to_string(m.phy.f_slot));
  put("q_m", std::to_string(m.phy.q_m));
  put("n_ldpc_threads", std::to_string(m.phy.n_ldpc_threads));
  put("sample_interval_s", text::format_double(m.sample_interval_s));
  if (m.start_epoch_ms) put("start_epoch_ms", std::to_string(*m.start_epoch_ms));
  if (m.tb_bits) put("tb_bits", text::format_double(*m.tb_bits));
  for (auto key : kPathKeys) {
    const auto it = m.artifact_paths.find(std::string(key));
    if (it != m.artifact_paths.end()) put(key, it->second.generic_string());
  }
  return out;
}

DuLogParse parse_du_log(std::string_view document) {
  DuLogParse out;
  std::size_t line_no = 0;
  for (const auto& raw : text::read_lines(document)) {
    ++line_no;
    const std::string_view line = raw;
    if (text::trim(line).empty()) continue;
    const auto tokens = text::split_ws(line);
    if (tokens.size() < 3) {
      out.diagnostics.push_back({line_no, "too few fields for a DU log record"});
      continue;
    }
    const auto epoch = text::parse_int(tokens[0]);
    if (!epoch) {
      out.diagnostics.push_back({line_no, fmt::format("non-numeric epoch prefix '{}'", tokens[0])});
      continue;
    }
    const auto clock = text::parse_double(tokens[2]);
    if (!clock) {
      out.diagnostics.push_back({line_no, fmt::format("non-numeric stack clock '{}'", tokens[2])});
      continue;
    }

    DuLogRecord rec;
    rec.epoch_ms = *epoch;
    rec.source_tag = std::string(tokens[1]);
    rec.stack_clock_s = *clock;
    rec.payload = OtherLine{raw};

    if (tokens.size() >= 5 && tokens[3] == "[NR_PHY]" && tokens[4] == "I") {
      const std::string message(rest_after_tokens(line, 5));
      std::smatch m;
      if (std::regex_match(message, m, ldpc_grammar())) {
        const auto call = text::parse_double(m[2].str());
        const auto seg = text::parse_double(m[3].str());
        if (call && seg && *call >= *seg) {
          rec.payload = LdpcTiming{*call, *seg};
        } else {
          out.diagnostics.push_back(
              {line_no, "LDPC timing with per-segment time above per-call time"});
        }
      }
    } else if (tokens.size() == 7 && tokens[3] == "[NR_MAC]" && tokens[4] == "I" &&
               tokens[5] == "Frame.Slot") {
      const auto dot = tokens[6].find('.');
      const auto frame = dot == std::string_view::npos ? std::nullopt
                                                       : text::parse_int(tokens[6].substr(0, dot));
      const auto slot = dot == std::string_view::npos ? std::nullopt
                                                      : text::parse_int(tokens[6].substr(dot + 1));
      if (frame && slot && *frame >= 0 && *frame <= 1023 && *slot >= 0) {
        rec.payload = SlotMarker{static_cast<int>(*frame), static_cast<int>(*slot)};
      } else {
        out.diagnostics.push_back(
            {line_no, fmt::format("malformed Frame.Slot token '{}'", tokens[6])});
      }
    }
    out.records.push_back(std::move(rec));
  }
  std::stable_sort(out.records.begin(), out.records.end(),
                   [](const DuLogRecord& a, const DuLogRecord& b) { return a.epoch_ms < b.epoch_ms; });
  return out;
}

DuLogParse parse_du_log(std::istream& lines) {
  std::ostringstream buf;
  buf << lines.rdbuf();
  return parse_du_log(buf.str());
}

FlowReport parse_flow_report(std::string_view document, std::string_view ue_id) {
  if (text::trim(document).empty()) {
    throw IngestError(fmt::format("unparseable flow report: {} (empty document)", ue_id));
  }
  json j;
  try {
    j = json::parse(document);
  } catch (const json::parse_error& e) {
    throw IngestError(fmt::format("unparseable flow report: {} ({})", ue_id, e.what()));
  }
  if (!j.is_object()) {
    throw IngestError(fmt::format("unparseable flow report: {} (not a JSON object)", ue_id));
  }

  FlowReport report;
  report.ue_id = std::string(ue_id);

  if (j.contains("intervals") && j["intervals"].is_array()) {
    for (const auto& entry : j["intervals"]) {
      const auto bytes = number_at(entry, {"sum", "bytes"});
      const auto seconds = number_at(entry, {"sum", "seconds"});
      if (!bytes || !seconds) continue;
      if (*bytes < 0 || *seconds < 0) {
        throw IngestError(fmt::format("flow report {} has a negative interval", ue_id));
      }
      FlowInterval iv;
      iv.bytes = *bytes;
      iv.seconds = *seconds;
      iv.start_s = number_at(entry, {"sum", "start"}).value_or(0.0);
      iv.end_s = number_at(entry, {"sum", "end"}).value_or(iv.start_s + iv.seconds);
      iv.bits_per_second =
          number_at(entry, {"sum", "bits_per_second"}).value_or(iv.seconds > 0 ? iv.bytes * 8 / iv.seconds : 0.0);
      report.intervals.push_back(iv);
    }
  }

  if (const auto bps = number_at(j, {"end", "sum_received", "bits_per_second"})) {
    if (*bps < 0) throw IngestError(fmt::format("flow report {} has negative goodput", ue_id));
    report.complete = true;
    report.goodput_bps = *bps;
    report.duration_s = number_at(j, {"end", "sum_received", "seconds"}).value_or(0.0);
    report.bytes_transferred = number_at(j, {"end", "sum_received", "bytes"})
                                   .value_or(report.goodput_bps * report.duration_s / 8.0);
    return report;
  }

  double bytes = 0.0;
  double seconds = 0.0;
  for (const auto& iv : report.intervals) {
    bytes += iv.bytes;
    seconds += iv.seconds;
  }
  if (report.intervals.empty() || !(seconds > 0)) {
    throw FlowNoDataError(
        fmt::format("flow report {} has neither an end-of-test summary nor intervals", ue_id));
  }
  report.complete = false;
  report.bytes_transferred = bytes;
  report.duration_s = seconds;
  report.goodput_bps = bytes * 8.0 / seconds;
  return report;
}

ResourceParse parse_resource_samples(std::string_view document, SampleKind kind) {
  ResourceParse out;
  const auto lines = text::read_lines(document);
  const auto header = kind == SampleKind::Cpu ? kCpuSamplesHeader : kGpuSamplesHeader;
  std::size_t first = 0;
  while (first < lines.size() && text::trim(lines[first]).empty()) ++first;
  if (first == lines.size()) {
    out.warnings.push_back({0, "empty sample capture"});
    return out;
  }
  if (text::trim(lines[first]) != header) {
    throw IngestError(fmt::format("sample capture header mismatch: expected columns '{}', got '{}'",
                                  header, text::trim(lines[first])));
  }
  const std::size_t expected_fields = kind == SampleKind::Cpu ? 3 : 4;
  for (std::size_t i = first + 1; i < lines.size(); ++i) {
    const auto line_no = i + 1;
    const auto line = text::trim(lines[i]);
    if (line.empty()) continue;
    auto fields = text::split(line, ',');
    for (auto& f : fields) f = text::trim(f);
    if (fields.size() != expected_fields) {
      out.warnings.push_back({line_no, fmt::format("expected {} fields, got {}", expected_fields, fields.size())});
      continue;
    }
    const auto epoch = text::parse_int(fields[0]);
    if (!epoch) {
      out.warnings.push_back({line_no, "non-numeric epoch"});
      continue;
    }
    ResourceSample s;
    s.epoch_ms = *epoch;
    const auto subject = text::to_lower(fields[1]);
    if (kind == SampleKind::Cpu) {
      if (subject == "cu") {
        s.subject = Subject::CU;
      } else if (subject == "du") {
        s.subject = Subject::DU;
      } else if (subject == "host") {
        s.subject = Subject::HOST;
      } else {
        out.warnings.push_back({line_no, fmt::format("unknown CPU subject '{}'", fields[1])});
        continue;
      }
      const auto pct = text::parse_double(fields[2]);
      if (!pct || *pct < 0) {
        out.warnings.push_back({line_no, "cpu percentage missing or negative"});
        continue;
      }
      s.cpu_core_equiv_pct = *pct;
    } else {
      if (subject != "gpu") {
        out.warnings.push_back({line_no, fmt::format("unknown GPU subject '{}'", fields[1])});
        continue;
      }
      s.subject = Subject::GPU;
      if (!fields[2].empty()) s.gpu_util_pct = text::parse_double(fields[2]);
      if (!fields[3].empty()) s.gpu_power_w = text::parse_double(fields[3]);
      const bool bad_util = !fields[2].empty() && (!s.gpu_util_pct || *s.gpu_util_pct < 0);
      const bool bad_power = !fields[3].empty() && (!s.gpu_power_w || *s.gpu_power_w < 0);
      if (bad_util || bad_power || (!s.gpu_util_pct && !s.gpu_power_w)) {
        out.warnings.push_back({line_no, "gpu measurement missing, malformed or negative"});
        continue;
      }
    }
    out.samples.push_back(s);
  }
  std::stable_sort(out.samples.begin(), out.samples.end(),
                   [](const ResourceSample& a, const ResourceSample& b) { return a.epoch_ms < b.epoch_ms; });
  return out;
}

std::vector<TelemetryEvent> parse_telemetry_capture(std::string_view document) {
  std::vector<TelemetryEvent> events;
  const auto lines = text::read_lines(document);
  std::size_t first = 0;
  while (first < lines.size() && text::trim(lines[first]).empty()) ++first;
  if (first == lines.size()) return events;
  if (text::trim(lines[first]) != kTelemetryHeader) {
    throw IngestError(fmt::format("telemetry header mismatch: expected columns '{}'", kTelemetryHeader));
  }
  for (std::size_t i = first + 1; i < lines.size(); ++i) {
    const auto line = text::trim(lines[i]);
    if (line.empty()) continue;
    const auto fields = text::split(line, ',');
    const auto epoch = fields.size() == 2 ? text::parse_int(text::trim(fields[0])) : std::nullopt;
    const auto count = fields.size() == 2 ? text::parse_int(text::trim(fields[1])) : std::nullopt;
    if (!epoch || !count) {
      throw IngestError(fmt::format("telemetry line {} is malformed: '{}'", i + 1, line));
    }
    if (*count < 0) {
      throw IngestError(fmt::format("telemetry line {} has negative message count {}", i + 1, *count));
    }
    events.push_back({*epoch, *count});
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const TelemetryEvent& a, const TelemetryEvent& b) { return a.epoch_ms < b.epoch_ms; });
  return events;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError(fmt::format("cannot read {}", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::int64_t RunBundle::run_start_epoch_ms() const {
  if (manifest.start_epoch_ms) return *manifest.start_epoch_ms;
  std::optional<std::int64_t> earliest;
  auto consider = [&earliest](std::int64_t t) {
    if (!earliest || t < *earliest) earliest = t;
  };
  if (!du_records.empty()) consider(du_records.front().epoch_ms);
  if (!samples.empty()) consider(samples.front().epoch_ms);
  if (!telemetry.empty()) consider(telemetry.front().epoch_ms);
  return earliest.value_or(0);
}

RunBundle load_run_bundle(const std::filesystem::path& manifest_path) {
  namespace fs = std::filesystem;
  if (!fs::exists(manifest_path)) {
    throw IngestError(fmt::format("manifest not found: {}", manifest_path.string()));
  }
  RunBundle bundle;
  bundle.manifest = parse_manifest(read_file(manifest_path), manifest_path.parent_path());
  const auto& paths = bundle.manifest.artifact_paths;

  const auto& du_log = paths.at("du_log");
  if (!fs::is_regular_file(du_log)) {
    throw IngestError(fmt::format("missing mandatory artifact du_log: {}", du_log.string()));
  }
  auto du = parse_du_log(read_file(du_log));
  bundle.du_records = std::move(du.records);
  for (const auto& d : du.diagnostics) {
    bundle.warnings.push_back(fmt::format("du_log line {}: {}", d.line, d.message));
  }

  const auto& cpu = paths.at("cpu_samples");
  if (!fs::is_regular_file(cpu)) {
    throw IngestError(fmt::format("missing mandatory artifact cpu_samples: {}", cpu.string()));
  }
  auto cpu_parse = parse_resource_samples(read_file(cpu), SampleKind::Cpu);
  bundle.samples = std::move(cpu_parse.samples);
  for (const auto& d : cpu_parse.warnings) {
    bundle.warnings.push_back(fmt::format("cpu_samples line {}: {}", d.line, d.message));
  }

  if (const auto it = paths.find("gpu_samples"); it != paths.end()) {
    if (fs::is_regular_file(it->second)) {
      auto gpu_parse = parse_resource_samples(read_file(it->second), SampleKind::Gpu);
      bundle.has_gpu_capture = !gpu_parse.samples.empty();
      bundle.samples.insert(bundle.samples.end(), gpu_parse.samples.begin(), gpu_parse.samples.end());
      for (const auto& d : gpu_parse.warnings) {
        bundle.warnings.push_back(fmt::format("gpu_samples line {}: {}", d.line, d.message));
      }
      std::stable_sort(bundle.samples.begin(), bundle.samples.end(),
                       [](const ResourceSample& a, const ResourceSample& b) { return a.epoch_ms < b.epoch_ms; });
    } else {
      bundle.warnings.push_back(fmt::format("optional gpu_samples not found: {}", it->second.string()));
    }
  }

  if (const auto it = paths.find("telemetry"); it != paths.end()) {
    if (fs::is_regular_file(it->second)) {
      bundle.telemetry = parse_telemetry_capture(read_file(it->second));
      bundle.has_telemetry_capture = true;
    } else {
      bundle.warnings.push_back(fmt::format("optional telemetry not found: {}", it->second.string()));
    }
  }

  const auto& flows_dir = paths.at("flows_dir");
  std::vector<fs::path> flow_files;
  if (fs::is_directory(flows_dir)) {
    for (const auto& entry : fs::directory_iterator(flows_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") {
        flow_files.push_back(entry.path());
      }
    }
  } else if (bundle.manifest.ue_count > 0) {
    throw IngestError(fmt::format("missing mandatory artifact flows_dir: {}", flows_dir.string()));
  }
  std::sort(flow_files.begin(), flow_files.end());
  if (static_cast<std::int64_t>(flow_files.size()) > bundle.manifest.ue_count) {
    throw IngestError(fmt::format("{} flow reports found for ue_count={}", flow_files.size(),
                                  bundle.manifest.ue_count));
  }
  for (const auto& file : flow_files) {
    const auto ue = file.stem().string();
    try {
      bundle.flows.push_back(parse_flow_report(read_file(file), ue));
    } catch (const FlowNoDataError& e) {
      FlowReport failed;
      failed.ue_id = ue;
      failed.has_data = false;
      bundle.flows.push_back(std::move(failed));
      bundle.warnings.push_back(e.detail());
    }
  }
  if (static_cast<std::int64_t>(flow_files.size()) < bundle.manifest.ue_count) {
    bundle.warnings.push_back(fmt::format("only {} of {} flow reports present", flow_files.size(),
                                          bundle.manifest.ue_count));
  }
  return bundle;
}

}  // namespace ranforensics
