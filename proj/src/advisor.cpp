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

#include "ranforensics/advisor.hpp"

#include <algorithm>
#include <array>
#include <set>

#include <fmt/format.h>

#include "ranforensics/error.hpp"
#include "ranforensics/text.hpp"

namespace ranforensics {

namespace {

constexpr std::string_view kMatrixVersion = "platform-matrix/2026.1";

const std::vector<std::string> kPlatforms = {
    "ns-O-RAN", "srsRAN ZMQ", "srsRAN-SDR", "srsRAN-O-RU/OFH", "OAI RFSim", "OAI-SDR", "OAI-O-RU/OFH",
    "Sionna",   "Sionna-RT",  "Sionna-RK",  "FlexRAN",         "ACAR",      "AODT"};

// One row per property; one letter per platform in kPlatforms order.
// N = native, A = achievable with augmentation, X = unsupported.
const std::array<std::pair<std::string_view, std::string_view>, 13> kRows{{
    {"WG4 7.2x fronthaul (HIL)", "XXXNXXNXXXANX"},
    {"WG4 7.2x fronthaul (software twin)", "XXXXXXXXXXANN"},
    {"Shared cuPHY & cuMAC GPU kernels", "XXXXXXXXXXXNN"},
    {"GPU L1 & slot-deadline MAC", "XXXXXXXXXXXNN"},
    {"O-DU-low (hi-PHY + MAC@TTI)", "AANNNNNAANNNN"},
    {"O-DU-high / O-CU (L2+/L3)", "ANNNNNNXXNNAA"},
    {"Near-RT E2 loop (E2AP, KPM/RC)", "NNNNAAAXXAAAA"},
    {"5GC<->UE (out-of-the-box)", "XAAANNAXXNAAA"},
    {"UE realism (3GPP PHY->NAS attach)", "AAANANNXXANAA"},
    {"Offline AI-RAN support (AI-for-RAN or AI-and-RAN)", "AAAAAAANNAAAA"},
    {"In-RAN AI (AI-for-RAN or AI-on-RAN)", "XAAAAAAXXAANN"},
    {"Per-TTI observability / ledger", "AAAAAAAXXAANN"},
    {"Typical accessibility", "NNNANNANNNANA"},
}};

SupportLevel from_letter(char c) {
  switch (c) {
    case 'N': return SupportLevel::Native;
    case 'A': return SupportLevel::Augmented;
    default: return SupportLevel::Unsupported;
  }
}

std::size_t lookup(const std::vector<std::string>& names, std::string_view name, const char* what) {
  const auto key = text::trim(name);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == key) return i;
  }
  std::vector<std::size_t> prefix;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!key.empty() && names[i].rfind(key, 0) == 0) prefix.push_back(i);
  }
  if (prefix.size() == 1) return prefix.front();
  throw AdvisorError(fmt::format("unknown {} '{}'; valid names: {}", what, key, fmt::join(names, "; ")));
}

ProgressionStage stage(std::string environment, std::string rationale, std::vector<std::string> platforms) {
  return {std::move(environment), std::move(rationale), std::move(platforms)};
}

}  // namespace

std::string_view to_string(SupportLevel level) {
  switch (level) {
    case SupportLevel::Native: return "native";
    case SupportLevel::Augmented: return "augmented";
    case SupportLevel::Unsupported: return "unsupported";
  }
  return "?";
}

SupportLevel parse_support_level(std::string_view s) {
  const auto v = text::to_lower(text::trim(s));
  if (v == "native") return SupportLevel::Native;
  if (v == "augmented") return SupportLevel::Augmented;
  if (v == "unsupported") return SupportLevel::Unsupported;
  throw AdvisorError(fmt::format("unknown support level '{}' (native|augmented|unsupported)", s));
}

CapabilityMatrix::CapabilityMatrix(std::string version, std::vector<std::string> platforms,
                                   std::vector<std::string> properties, Cells cells)
    : version_(std::move(version)),
      platforms_(std::move(platforms)),
      properties_(std::move(properties)),
      cells_(std::move(cells)) {
  if (cells_.rows() != static_cast<Eigen::Index>(properties_.size()) ||
      cells_.cols() != static_cast<Eigen::Index>(platforms_.size())) {
    throw AdvisorError("capability matrix is incomplete");
  }
  if (std::set<std::string>(platforms_.begin(), platforms_.end()).size() != platforms_.size()) {
    throw AdvisorError("duplicate platform name");
  }
  if (std::set<std::string>(properties_.begin(), properties_.end()).size() != properties_.size()) {
    throw AdvisorError("duplicate property name");
  }
  if ((cells_.array() < 0).any() || (cells_.array() > 2).any()) {
    throw AdvisorError("capability cell out of range");
  }
}

std::size_t CapabilityMatrix::property_index(std::string_view name) const {
  return lookup(properties_, name, "property");
}

std::size_t CapabilityMatrix::platform_index(std::string_view name) const {
  return lookup(platforms_, name, "platform");
}

SupportLevel CapabilityMatrix::cell(std::size_t platform, std::size_t property) const {
  return static_cast<SupportLevel>(cells_(static_cast<Eigen::Index>(property), static_cast<Eigen::Index>(platform)));
}

SupportLevel CapabilityMatrix::cell(std::string_view platform, std::string_view property) const {
  return cell(platform_index(platform), property_index(property));
}

bool CapabilityMatrix::operator==(const CapabilityMatrix& other) const {
  return version_ == other.version_ && platforms_ == other.platforms_ && properties_ == other.properties_ &&
         cells_ == other.cells_;
}

const CapabilityMatrix& load_matrix() {
  static const CapabilityMatrix matrix = [] {
    CapabilityMatrix::Cells cells(static_cast<Eigen::Index>(kRows.size()),
                                  static_cast<Eigen::Index>(kPlatforms.size()));
    std::vector<std::string> properties;
    for (std::size_t r = 0; r < kRows.size(); ++r) {
      properties.emplace_back(kRows[r].first);
      for (std::size_t c = 0; c < kPlatforms.size(); ++c) {
        cells(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            static_cast<std::int8_t>(from_letter(kRows[r].second[c]));
      }
    }
    return CapabilityMatrix(std::string(kMatrixVersion), kPlatforms, std::move(properties), std::move(cells));
  }();
  return matrix;
}

namespace {

// Names may contain commas; quote them CSV-style.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> csv_split(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw AdvisorError("unterminated quote in matrix CSV");
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace

std::string export_matrix_csv(const CapabilityMatrix& matrix) {
  std::string out = fmt::format("# version={}\nproperty", matrix.version());
  for (const auto& p : matrix.platforms()) out += "," + csv_field(p);
  out += '\n';
  for (std::size_t r = 0; r < matrix.properties().size(); ++r) {
    out += csv_field(matrix.properties()[r]);
    for (std::size_t c = 0; c < matrix.platforms().size(); ++c) {
      out += ',';
      out += to_string(matrix.cell(c, r));
    }
    out += '\n';
  }
  return out;
}

CapabilityMatrix import_matrix_csv(std::string_view document) {
  std::string version = "unversioned";
  std::vector<std::string> platforms;
  std::vector<std::string> properties;
  std::vector<std::vector<std::int8_t>> rows;
  bool have_header = false;
  for (const auto& raw : text::read_lines(document)) {
    const auto line = text::trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto body = text::trim(line.substr(1));
      if (body.rfind("version=", 0) == 0) version = std::string(body.substr(8));
      continue;
    }
    auto fields = csv_split(line);
    if (!have_header) {
      if (fields.size() < 2 || fields[0] != "property") throw AdvisorError("matrix CSV header must start with 'property'");
      platforms.assign(fields.begin() + 1, fields.end());
      have_header = true;
      continue;
    }
    if (fields.size() != platforms.size() + 1) {
      throw AdvisorError(fmt::format("matrix row '{}' has {} cells, expected {}", fields[0], fields.size() - 1,
                                     platforms.size()));
    }
    properties.push_back(fields[0]);
    std::vector<std::int8_t> row;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      row.push_back(static_cast<std::int8_t>(parse_support_level(fields[i])));
    }
    rows.push_back(std::move(row));
  }
  if (!have_header) throw AdvisorError("matrix CSV is empty");
  CapabilityMatrix::Cells cells(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(platforms.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < platforms.size(); ++c) {
      cells(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return CapabilityMatrix(std::move(version), std::move(platforms), std::move(properties), std::move(cells));
}

Requirement parse_requirement(std::string_view s) {
  const auto eq = s.rfind('=');
  if (eq == std::string_view::npos) {
    return {std::string(text::trim(s)), SupportLevel::Native};
  }
  return {std::string(text::trim(s.substr(0, eq))), parse_support_level(s.substr(eq + 1))};
}

std::vector<RankedPlatform> query(const CapabilityMatrix& matrix, const RequirementQuery& q) {
  std::vector<std::pair<std::size_t, SupportLevel>> required;
  std::set<std::size_t> seen;
  for (const auto& r : q.requirements) {
    const auto idx = matrix.property_index(r.property);
    if (!seen.insert(idx).second) {
      throw AdvisorError(fmt::format("duplicate requirement on '{}'", matrix.properties()[idx]));
    }
    required.emplace_back(idx, r.minimum);
  }

  std::vector<RankedPlatform> out;
  for (std::size_t c = 0; c < matrix.platforms().size(); ++c) {
    bool ok = true;
    RankedPlatform rp{matrix.platforms()[c], 0, 0};
    for (const auto& [prop, minimum] : required) {
      const auto level = matrix.cell(c, prop);
      if (level < minimum) {
        ok = false;
        break;
      }
      if (level == SupportLevel::Native) ++rp.native_among_required;
    }
    if (!ok) continue;
    for (std::size_t r = 0; r < matrix.properties().size(); ++r) {
      if (matrix.cell(c, r) == SupportLevel::Native) ++rp.native_overall;
    }
    out.push_back(std::move(rp));
  }
  std::sort(out.begin(), out.end(), [](const RankedPlatform& a, const RankedPlatform& b) {
    if (a.native_among_required != b.native_among_required) return a.native_among_required > b.native_among_required;
    if (a.native_overall != b.native_overall) return a.native_overall > b.native_overall;
    return a.name < b.name;
  });
  return out;
}

namespace {

constexpr std::array<std::pair<ClaimClass, std::string_view>, 7> kClaimNames{{
    {ClaimClass::NearRtControl, "near-rt-control"},
    {ClaimClass::FullStackProtocol, "full-stack-protocol"},
    {ClaimClass::RfExecution, "rf-execution"},
    {ClaimClass::FronthaulTiming, "fronthaul-timing"},
    {ClaimClass::OfflineAi, "offline-ai"},
    {ClaimClass::InRanAi, "in-ran-ai"},
    {ClaimClass::PerTtiObservability, "per-tti-observability"},
}};

}  // namespace

std::string_view to_string(ClaimClass c) {
  for (const auto& [k, name] : kClaimNames) {
    if (k == c) return name;
  }
  return "?";
}

ClaimClass parse_claim_class(std::string_view s) {
  auto key = text::to_lower(text::trim(s));
  std::replace(key.begin(), key.end(), '_', '-');
  for (const auto& [k, name] : kClaimNames) {
    if (name == key) return k;
  }
  // Also accept the CamelCase enumerator spelling.
  static const std::array<std::pair<std::string_view, ClaimClass>, 7> camel{{
      {"nearrtcontrol", ClaimClass::NearRtControl},
      {"fullstackprotocol", ClaimClass::FullStackProtocol},
      {"rfexecution", ClaimClass::RfExecution},
      {"fronthaultiming", ClaimClass::FronthaulTiming},
      {"offlineai", ClaimClass::OfflineAi},
      {"inranai", ClaimClass::InRanAi},
      {"perttiobservability", ClaimClass::PerTtiObservability},
  }};
  std::string squashed;
  for (char c : key) {
    if (c != '-') squashed += c;
  }
  for (const auto& [name, k] : camel) {
    if (name == squashed) return k;
  }
  std::vector<std::string_view> valid;
  for (const auto& kv : kClaimNames) valid.push_back(kv.second);
  throw AdvisorError(fmt::format("unknown claim class '{}'; valid: {}", s, fmt::join(valid, ", ")));
}

const std::vector<ClaimClass>& all_claim_classes() {
  static const std::vector<ClaimClass> all = [] {
    std::vector<ClaimClass> v;
    for (const auto& kv : kClaimNames) v.push_back(kv.first);
    return v;
  }();
  return all;
}

ProgressionPlan progression(ClaimClass claim_class) {
  ProgressionPlan plan;
  plan.claim_class = claim_class;
  auto& s = plan.stages;
  switch (claim_class) {
    case ClaimClass::NearRtControl:
      s.push_back(stage("host-OS emulation", "native E2 exposure with fast, repeatable iteration on control logic",
                        {"srsRAN ZMQ", "OAI RFSim"}));
      s.push_back(stage("Split-8 SDR/HIL", "re-check policies once RF impairments enter the loop",
                        {"srsRAN-SDR", "OAI-SDR"}));
      break;
    case ClaimClass::FullStackProtocol:
      s.push_back(stage("host-OS emulation", "full NR signalling and a working core path without RF variability",
                        {"OAI RFSim", "srsRAN ZMQ"}));
      s.push_back(stage("Split-8 SDR/HIL", "protocol behaviour under real RF execution", {"OAI-SDR", "srsRAN-SDR"}));
      s.push_back(stage("O-RU/OFH", "open-fronthaul transport when the claim reaches RU-coupled timing",
                        {"OAI-O-RU/OFH", "srsRAN-O-RU/OFH"}));
      break;
    case ClaimClass::RfExecution:
      s.push_back(stage("ns-O-RAN", "large-topology prototyping under deterministic simulation", {"ns-O-RAN"}));
      s.push_back(stage("host-OS emulation", "protocol interactions on real stack code", {"OAI RFSim", "srsRAN ZMQ"}));
      s.push_back(stage("Split-8 SDR/HIL", "RF execution through an ordinary SDR front end",
                        {"OAI-SDR", "srsRAN-SDR"}));
      break;
    case ClaimClass::FronthaulTiming:
      s.push_back(stage("ns-O-RAN", "large-topology prototyping under deterministic simulation", {"ns-O-RAN"}));
      s.push_back(stage("host-OS emulation", "protocol interactions on real stack code", {"OAI RFSim", "srsRAN ZMQ"}));
      s.push_back(stage("Split-8 SDR/HIL", "RF execution through an ordinary SDR front end",
                        {"OAI-SDR", "srsRAN-SDR"}));
      s.push_back(stage("O-RU/OFH", "native 7.2x fronthaul: RU synchronization, OFH transport and interoperability",
                        {"OAI-O-RU/OFH", "srsRAN-O-RU/OFH", "ACAR"}));
      break;
    case ClaimClass::OfflineAi:
      s.push_back(stage("Sionna PHY/SYS", "differentiable link-level design with GPU batch throughput", {"Sionna"}));
      s.push_back(stage("Sionna-RT", "ray-traced channel datasets at scale", {"Sionna-RT"}));
      break;
    case ClaimClass::InRanAi:
      s.push_back(stage("Sionna", "offline training of the learned block", {"Sionna", "Sionna-RT"}));
      s.push_back(stage("AODT", "code-realistic twin for debugging the promoted model", {"AODT"}));
      s.push_back(stage("ACAR", "GPU-native runtime executing the model under slot deadlines", {"ACAR"}));
      break;
    case ClaimClass::PerTtiObservability:
      s.push_back(stage("AODT", "per-TTI ledger in a twin before live execution", {"AODT"}));
      s.push_back(stage("ACAR", "per-slot telemetry from a GPU-native O-DU", {"ACAR"}));
      break;
  }
  return plan;
}

}  // namespace ranforensics
