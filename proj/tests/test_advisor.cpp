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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ranforensics/advisor.hpp"
#include "ranforensics/error.hpp"

namespace rf = ranforensics;

namespace {

std::set<std::string> names(const std::vector<rf::RankedPlatform>& ranked) {
  std::set<std::string> out;
  for (const auto& r : ranked) out.insert(r.name);
  return out;
}

rf::RequirementQuery q(std::initializer_list<std::pair<const char*, rf::SupportLevel>> reqs) {
  rf::RequirementQuery out;
  for (const auto& [p, l] : reqs) out.requirements.push_back({p, l});
  return out;
}

}  // namespace

TEST(Matrix, Shape) {
  const auto& m = rf::load_matrix();
  EXPECT_EQ(m.platforms().size(), 13u);
  EXPECT_EQ(m.properties().size(), 13u);
  EXPECT_EQ(m.cells().rows(), 13);
  EXPECT_FALSE(m.version().empty());
}

TEST(Matrix, CellExamples) {
  const auto& m = rf::load_matrix();
  EXPECT_EQ(m.cell("ACAR", "WG4 7.2x fronthaul (HIL)"), rf::SupportLevel::Native);
  EXPECT_EQ(m.cell("Sionna", "Near-RT E2 loop"), rf::SupportLevel::Unsupported);
  EXPECT_EQ(m.cell("FlexRAN", "WG4 7.2x fronthaul (HIL)"), rf::SupportLevel::Augmented);
  EXPECT_THROW(m.cell("NoSuchPlatform", "Typical accessibility"), rf::AdvisorError);
}

TEST(Query, Examples) {
  const auto& m = rf::load_matrix();
  using L = rf::SupportLevel;
  EXPECT_EQ(names(rf::query(m, q({{"WG4 7.2x fronthaul (HIL)", L::Native}}))),
            (std::set<std::string>{"srsRAN-O-RU/OFH", "OAI-O-RU/OFH", "ACAR"}));
  EXPECT_EQ(names(rf::query(m, q({{"Shared cuPHY & cuMAC GPU kernels", L::Native}}))),
            (std::set<std::string>{"ACAR", "AODT"}));
  EXPECT_TRUE(rf::query(m, q({{"GPU L1 & slot-deadline MAC", L::Native}, {"Near-RT E2 loop", L::Native}})).empty());
  EXPECT_EQ(rf::query(m, {}).size(), 13u);
}

TEST(Query, UnknownPropertyListsValidNames) {
  try {
    rf::query(rf::load_matrix(), q({{"Quantum fronthaul", rf::SupportLevel::Native}}));
    FAIL();
  } catch (const rf::AdvisorError& e) {
    EXPECT_NE(std::string(e.what()).find("Typical accessibility"), std::string::npos);
  }
}

TEST(Query, RankingIsDeterministic) {
  const auto ranked = rf::query(rf::load_matrix(), q({{"O-DU-low", rf::SupportLevel::Augmented}}));
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    const auto& a = ranked[i - 1];
    const auto& b = ranked[i];
    const bool ordered = a.native_among_required > b.native_among_required ||
                         (a.native_among_required == b.native_among_required &&
                          (a.native_overall > b.native_overall ||
                           (a.native_overall == b.native_overall && a.name < b.name)));
    EXPECT_TRUE(ordered) << a.name << " before " << b.name;
  }
}

TEST(Query, MonotoneUnderAddedOrRaisedRequirements) {
  const auto& m = rf::load_matrix();
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> prop(0, m.properties().size() - 1);
  std::uniform_int_distribution<int> lvl(0, 2);
  for (int c = 0; c < 1000; ++c) {
    rf::RequirementQuery base;
    std::set<std::size_t> used;
    const int count = static_cast<int>(prop(rng) % 4);
    for (int i = 0; i < count; ++i) {
      const auto p = prop(rng);
      if (!used.insert(p).second) continue;
      base.requirements.push_back({m.properties()[p], static_cast<rf::SupportLevel>(lvl(rng))});
    }
    const auto before = names(rf::query(m, base));

    auto added = base;
    std::size_t extra = prop(rng);
    while (used.count(extra)) extra = (extra + 1) % m.properties().size();
    added.requirements.push_back({m.properties()[extra], static_cast<rf::SupportLevel>(lvl(rng))});
    const auto after = names(rf::query(m, added));
    EXPECT_TRUE(std::includes(before.begin(), before.end(), after.begin(), after.end()));

    for (std::size_t i = 0; i < base.requirements.size(); ++i) {
      if (base.requirements[i].minimum != rf::SupportLevel::Augmented) continue;
      auto raised = base;
      raised.requirements[i].minimum = rf::SupportLevel::Native;
      const auto r = names(rf::query(m, raised));
      EXPECT_TRUE(std::includes(before.begin(), before.end(), r.begin(), r.end()));
    }
  }
}

TEST(Query, DuplicateRequirementRejected) {
  EXPECT_THROW(rf::query(rf::load_matrix(), q({{"Typical accessibility", rf::SupportLevel::Native},
                                               {"Typical accessibility", rf::SupportLevel::Augmented}})),
               rf::AdvisorError);
}

TEST(Requirement, Parse) {
  const auto r = rf::parse_requirement("WG4 7.2x fronthaul (HIL)=native");
  EXPECT_EQ(r.property, "WG4 7.2x fronthaul (HIL)");
  EXPECT_EQ(r.minimum, rf::SupportLevel::Native);
  EXPECT_EQ(rf::parse_requirement("Typical accessibility=augmented").minimum, rf::SupportLevel::Augmented);
  EXPECT_THROW(rf::parse_requirement("x=sometimes"), rf::AdvisorError);
}

TEST(MatrixCsv, RoundTrip) {
  const auto& m = rf::load_matrix();
  const auto csv = rf::export_matrix_csv(m);
  const auto back = rf::import_matrix_csv(csv);
  EXPECT_TRUE(back == m);
  EXPECT_EQ(back.version(), m.version());
  EXPECT_EQ(rf::export_matrix_csv(back), csv);
}

TEST(Progression, Examples) {
  auto envs = [](rf::ClaimClass c) {
    std::vector<std::string> out;
    for (const auto& s : rf::progression(c).stages) out.push_back(s.environment);
    return out;
  };
  EXPECT_EQ(envs(rf::ClaimClass::FronthaulTiming),
            (std::vector<std::string>{"ns-O-RAN", "host-OS emulation", "Split-8 SDR/HIL", "O-RU/OFH"}));
  EXPECT_EQ(envs(rf::ClaimClass::OfflineAi), (std::vector<std::string>{"Sionna PHY/SYS", "Sionna-RT"}));
  EXPECT_EQ(envs(rf::ClaimClass::InRanAi), (std::vector<std::string>{"Sionna", "AODT", "ACAR"}));
  for (auto c : rf::all_claim_classes()) {
    EXPECT_EQ(rf::parse_claim_class(rf::to_string(c)), c);
    EXPECT_FALSE(rf::progression(c).stages.empty());
  }
  EXPECT_EQ(rf::parse_claim_class("FronthaulTiming"), rf::ClaimClass::FronthaulTiming);
  EXPECT_THROW(rf::parse_claim_class("telepathy"), rf::AdvisorError);
}

TEST(Progression, StagePlatformsExistInMatrix) {
  const auto& m = rf::load_matrix();
  for (auto c : rf::all_claim_classes()) {
    for (const auto& s : rf::progression(c).stages) {
      for (const auto& p : s.platforms) EXPECT_NO_THROW(m.platform_index(p)) << p;
    }
  }
}
