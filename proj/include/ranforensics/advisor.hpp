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

#ifndef RANFORENSICS_ADVISOR_HPP_
#define RANFORENSICS_ADVISOR_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace ranforensics {

// Ordered: Native > Augmented > Unsupported.
enum class SupportLevel : std::int8_t { Unsupported = 0, Augmented = 1, Native = 2 };

std::string_view to_string(SupportLevel level);
SupportLevel parse_support_level(std::string_view s);

// Platforms (columns) by properties (rows) with a support level per cell.
class CapabilityMatrix {
 public:
  using Cells = Eigen::Matrix<std::int8_t, Eigen::Dynamic, Eigen::Dynamic>;

  CapabilityMatrix(std::string version, std::vector<std::string> platforms,
                   std::vector<std::string> properties, Cells cells);

  const std::string& version() const { return version_; }
  const std::vector<std::string>& platforms() const { return platforms_; }
  const std::vector<std::string>& properties() const { return properties_; }
  const Cells& cells() const { return cells_; }

  // Exact name, or a unique prefix of one (e.g. "Near-RT E2 loop").
  std::size_t property_index(std::string_view name) const;
  std::size_t platform_index(std::string_view name) const;

  SupportLevel cell(std::string_view platform, std::string_view property) const;
  SupportLevel cell(std::size_t platform, std::size_t property) const;

  bool operator==(const CapabilityMatrix& other) const;

 private:
  std::string version_;
  std::vector<std::string> platforms_;
  std::vector<std::string> properties_;
  Cells cells_;
};

// Built-in platform capability dataset.
const CapabilityMatrix& load_matrix();

// CSV: header "property,<platform>..."; cells native|augmented|unsupported.
// The version tag travels in a leading "# version=<tag>" line.
std::string export_matrix_csv(const CapabilityMatrix& matrix);
CapabilityMatrix import_matrix_csv(std::string_view document);

struct Requirement {
  std::string property;
  SupportLevel minimum = SupportLevel::Native;
};

struct RequirementQuery {
  std::vector<Requirement> requirements;
};

// Parses "WG4 7.2x fronthaul (HIL)=native".
Requirement parse_requirement(std::string_view s);

struct RankedPlatform {
  std::string name;
  int native_among_required = 0;
  int native_overall = 0;
};

// Platforms meeting every minimum, ranked by native count among the
// required properties, then native count overall, then name.
std::vector<RankedPlatform> query(const CapabilityMatrix& matrix, const RequirementQuery& q);

enum class ClaimClass {
  NearRtControl,
  FullStackProtocol,
  RfExecution,
  FronthaulTiming,
  OfflineAi,
  InRanAi,
  PerTtiObservability,
};

std::string_view to_string(ClaimClass c);
ClaimClass parse_claim_class(std::string_view s);
const std::vector<ClaimClass>& all_claim_classes();

struct ProgressionStage {
  std::string environment;
  std::string rationale;
  // Matrix columns that realize this stage.
  std::vector<std::string> platforms;
};

struct ProgressionPlan {
  ClaimClass claim_class = ClaimClass::FronthaulTiming;
  std::vector<ProgressionStage> stages;
};

ProgressionPlan progression(ClaimClass claim_class);

}  // namespace ranforensics

#endif  // RANFORENSICS_ADVISOR_HPP_
