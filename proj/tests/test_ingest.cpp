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

#include <random>
#include <sstream>

#include <fmt/format.h>

#include "fixtures.hpp"
#include "ranforensics/error.hpp"
#include "ranforensics/ingest.hpp"
#include "ranforensics/synth.hpp"
#include "test_util.hpp"

namespace rf = ranforensics;

namespace {

const char* kMinimalManifest =
    "stack_id=OAI\nue_count=1\nrun_duration_s=60\ncu_cores=6-7\ndu_cores=8-11\nhost_core_count=20\n"
    "n_prb=106\nn_sc=12\nn_sym=14\nf_slot=2000\nq_m=4\nn_ldpc_threads=4\nsample_interval_s=0.5\n"
    "du_log=du_logs.tsv\nflows_dir=flows\ncpu_samples=cpu_samples.csv\n";

}  // namespace

TEST(DuLog, LdpcLineFromCapture) {
  const auto parsed = rf::parse_du_log(
      "1772062027043 oai-nr-du 532641.987492 [NR_PHY] I CPU LDPC decoder:   235.07 us (  59.18 us / seg)\n");
  ASSERT_EQ(parsed.records.size(), 1u);
  EXPECT_TRUE(parsed.diagnostics.empty());
  const auto& r = parsed.records[0];
  EXPECT_EQ(r.epoch_ms, 1772062027043);
  EXPECT_EQ(r.source_tag, "oai-nr-du");
  EXPECT_EQ(r.stack_clock_s, 532641.987492);
  const auto* ldpc = std::get_if<rf::LdpcTiming>(&r.payload);
  ASSERT_NE(ldpc, nullptr);
  EXPECT_EQ(ldpc->avg_call_us, 235.07);
  EXPECT_EQ(ldpc->per_seg_us, 59.18);
}

TEST(DuLog, SlotMarkerSplitsAtDot) {
  const auto parsed = rf::parse_du_log("1772062030875 oai-nr-du 532645.818719 [NR_MAC] I Frame.Slot 768.0\n");
  ASSERT_EQ(parsed.records.size(), 1u);
  const auto* m = std::get_if<rf::SlotMarker>(&parsed.records[0].payload);
  ASSERT_NE(m, nullptr);
  EXPECT_EQ(*m, (rf::SlotMarker{768, 0}));
}

TEST(DuLog, UnknownSubsystemKeptAsOther) {
  const std::string line = "1772062030880 oai-nr-du 532645.9 [GTPU] I tunnel created";
  const auto parsed = rf::parse_du_log(line + "\n");
  ASSERT_EQ(parsed.records.size(), 1u);
  const auto* o = std::get_if<rf::OtherLine>(&parsed.records[0].payload);
  ASSERT_NE(o, nullptr);
  EXPECT_EQ(o->raw, line);
}

TEST(DuLog, BadEpochIsRecordLevelDiagnostic) {
  const auto parsed = rf::parse_du_log(
      "abc oai-nr-du 1.0 [NR_MAC] I Frame.Slot 1.2\n"
      "1772062030875\toai-nr-du\t532645.818719 [NR_MAC] I Frame.Slot 768.3\n");
  ASSERT_EQ(parsed.records.size(), 1u);
  ASSERT_EQ(parsed.diagnostics.size(), 1u);
  EXPECT_EQ(parsed.diagnostics[0].line, 1u);
  EXPECT_EQ(std::get<rf::SlotMarker>(parsed.records[0].payload), (rf::SlotMarker{768, 3}));
}

TEST(DuLog, OrderingIsStableForEqualTimestamps) {
  const auto parsed = rf::parse_du_log(
      "20 t 1.0 [X] I second\n"
      "10 t 1.0 [X] I first-a\n"
      "20 t 1.0 [X] I third\n"
      "10 t 1.0 [X] I first-b\n");
  ASSERT_EQ(parsed.records.size(), 4u);
  std::vector<std::string> order;
  for (const auto& r : parsed.records) order.push_back(std::get<rf::OtherLine>(r.payload).raw);
  EXPECT_NE(order[0].find("first-a"), std::string::npos);
  EXPECT_NE(order[1].find("first-b"), std::string::npos);
  EXPECT_NE(order[2].find("second"), std::string::npos);
  EXPECT_NE(order[3].find("third"), std::string::npos);
}

TEST(DuLog, FuzzedConformingLinesNeverFail) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> frame(0, 1023), slot(0, 19), kind(0, 1);
  std::uniform_real_distribution<double> us(1.0, 5000.0);
  std::string doc;
  std::vector<rf::DuPayload> expected;
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t epoch = 1772062000000 + i;
    if (kind(rng) == 0) {
      const double call = std::round(us(rng) * 100) / 100;
      const double seg = std::round(call / 4 * 100) / 100;
      doc += fmt::format("{} oai-nr-du {:.6f} [NR_PHY] I CPU LDPC decoder: {:.2f} us ( {:.2f} us / seg)\n", epoch,
                         532641.0 + i * 0.001, call, seg);
      expected.emplace_back(rf::LdpcTiming{call, seg});
    } else {
      const int f = frame(rng), s = slot(rng);
      doc += fmt::format("{}\toai-nr-du\t{:.6f} [NR_MAC] I Frame.Slot {}.{}\n", epoch, 532641.0 + i * 0.001, f, s);
      expected.emplace_back(rf::SlotMarker{f, s});
    }
  }
  const auto parsed = rf::parse_du_log(doc);
  EXPECT_TRUE(parsed.diagnostics.empty());
  ASSERT_EQ(parsed.records.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(parsed.records[i].payload, expected[i]);
}

TEST(FlowReport, EndSummaryIsComplete) {
  const auto r = rf::parse_flow_report(
      R"({"end":{"sum_received":{"seconds":60.0,"bytes":859425000.0,"bits_per_second":114590000.0}}})", "ue01");
  EXPECT_TRUE(r.complete);
  EXPECT_FALSE(r.estimated());
  EXPECT_EQ(r.goodput_bps, 114.59e6);
}

TEST(FlowReport, IntervalsOnlyIsEstimated) {
  // 30 one-second intervals of 250000 bytes: 60 Mbit over 30 s.
  std::string doc = R"({"intervals":[)";
  for (int i = 0; i < 30; ++i) {
    if (i > 0) doc += ",";
    doc += fmt::format(R"({{"sum":{{"start":{},"end":{},"seconds":1.0,"bytes":250000.0}}}})", i, i + 1);
  }
  doc += "]}";
  const auto r = rf::parse_flow_report(doc, "ue02");
  EXPECT_FALSE(r.complete);
  EXPECT_TRUE(r.estimated());
  EXPECT_DOUBLE_EQ(r.goodput_bps, 60e6 / 30.0);
}

TEST(FlowReport, EmptyOrGarbageNamesTheUe) {
  for (const char* doc : {"", "not json", "[1,2]"}) {
    try {
      rf::parse_flow_report(doc, "ue07");
      FAIL() << "expected an error for '" << doc << "'";
    } catch (const rf::IngestError& e) {
      EXPECT_NE(std::string(e.what()).find("unparseable flow report"), std::string::npos);
      EXPECT_NE(std::string(e.what()).find("ue07"), std::string::npos);
    }
  }
}

TEST(FlowReport, NoSummaryNoIntervalsIsNoData) {
  EXPECT_THROW(rf::parse_flow_report(R"({"start":{}})", "ue03"), rf::FlowNoDataError);
}

TEST(ResourceSamples, CpuAndGpuRows) {
  const auto cpu = rf::parse_resource_samples("epoch_ms,subject,cpu_core_equiv_pct\n1772062027043,du,324.79\n",
                                              rf::SampleKind::Cpu);
  ASSERT_EQ(cpu.samples.size(), 1u);
  EXPECT_EQ(cpu.samples[0].subject, rf::Subject::DU);
  EXPECT_EQ(*cpu.samples[0].cpu_core_equiv_pct, 324.79);

  const auto gpu = rf::parse_resource_samples(
      "epoch_ms,subject,gpu_util_pct,gpu_power_w\n1772062027043,gpu,44.85,38.48\n", rf::SampleKind::Gpu);
  ASSERT_EQ(gpu.samples.size(), 1u);
  EXPECT_EQ(gpu.samples[0].subject, rf::Subject::GPU);
  EXPECT_EQ(*gpu.samples[0].gpu_util_pct, 44.85);
  EXPECT_EQ(*gpu.samples[0].gpu_power_w, 38.48);
}

TEST(ResourceSamples, EmptyWarnsHeaderMismatchFails) {
  const auto empty = rf::parse_resource_samples("", rf::SampleKind::Cpu);
  EXPECT_TRUE(empty.samples.empty());
  EXPECT_FALSE(empty.warnings.empty());
  try {
    rf::parse_resource_samples("time,who,pct\n1,du,3\n", rf::SampleKind::Cpu);
    FAIL();
  } catch (const rf::IngestError& e) {
    EXPECT_NE(std::string(e.what()).find("cpu_core_equiv_pct"), std::string::npos);
  }
}

TEST(Telemetry, MeanAndNegativeCounts) {
  std::string doc = "epoch_ms,message_count\n";
  for (int i = 0; i < 60; ++i) doc += fmt::format("{},100\n", 1772062000000 + i * 1000);
  const auto events = rf::parse_telemetry_capture(doc);
  ASSERT_EQ(events.size(), 60u);
  double sum = 0;
  for (const auto& e : events) sum += static_cast<double>(e.message_count);
  EXPECT_EQ(sum / 60.0, 100.0);

  const auto zeros = rf::parse_telemetry_capture("epoch_ms,message_count\n1,0\n2,0\n");
  ASSERT_EQ(zeros.size(), 2u);
  EXPECT_EQ(zeros[1].message_count, 0);
  EXPECT_THROW(rf::parse_telemetry_capture("epoch_ms,message_count\n1,-3\n"), rf::IngestError);
}

TEST(Manifest, CoreListsAndMissingKeys) {
  EXPECT_EQ(rf::parse_core_list("8-11"), (std::set<int>{8, 9, 10, 11}));
  EXPECT_EQ(rf::parse_core_list("0-2,5"), (std::set<int>{0, 1, 2, 5}));
  EXPECT_EQ(rf::format_core_list({0, 1, 2, 5}), "0-2,5");
  EXPECT_THROW(rf::parse_core_list("3-1"), rf::IngestError);

  const auto m = rf::parse_manifest(kMinimalManifest, "/data/run");
  EXPECT_EQ(m.stack_id, rf::StackId::OAI);
  EXPECT_EQ(m.du_cores.size(), 4u);
  EXPECT_EQ(m.artifact_paths.at("du_log"), std::filesystem::path("/data/run/du_logs.tsv"));
  EXPECT_EQ(rf::parse_manifest(rf::render_manifest(m), "/elsewhere").phy, m.phy);

  try {
    rf::parse_manifest("stack_id=OAI\n");
    FAIL();
  } catch (const rf::IngestError& e) {
    EXPECT_NE(std::string(e.what()).find("du_cores"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("f_slot"), std::string::npos);
  }
  EXPECT_THROW(rf::parse_manifest(std::string(kMinimalManifest) + "cu_cores=8\n"), rf::IngestError);
}

TEST(Bundle, OaiSingleUeRun) {
  rftest::TempDir dir("ingest");
  auto truth = rftest::simple_truth(rf::StackId::OAI, {{1, 114.59, 324.79, 1.84}, {3, 65.21, 290.0, 1.0}});
  const auto runs = rf::expand(truth);
  const auto path = rf::generate_bundle_files(runs[0], dir.path() / "oai_n1");
  const auto bundle = rf::load_run_bundle(path);
  EXPECT_EQ(bundle.flows.size(), 1u);
  EXPECT_FALSE(bundle.has_gpu_capture);
  bool cu = false, du = false, host = false;
  for (const auto& s : bundle.samples) {
    cu |= s.subject == rf::Subject::CU;
    du |= s.subject == rf::Subject::DU;
    host |= s.subject == rf::Subject::HOST;
  }
  EXPECT_TRUE(cu && du && host);
}

TEST(Bundle, SrkIdleRunHasGpuAndNoFlows) {
  rftest::TempDir dir("ingest");
  auto truth = rftest::simple_truth(rf::StackId::SRK, {{0, 0, 212.87, 3.1}, {1, 103.34, 349.31, 1.7}});
  truth.runs[0].ldpc_per_call_us.reset();
  const auto path = rf::generate_bundle_files(rf::expand(truth)[0], dir.path() / "srk_n0");
  const auto bundle = rf::load_run_bundle(path);
  EXPECT_TRUE(bundle.flows.empty());
  EXPECT_TRUE(bundle.has_gpu_capture);
}

TEST(Bundle, MissingDuLogListsPath) {
  rftest::TempDir dir("ingest");
  rftest::write_text(dir / "run.manifest", kMinimalManifest);
  rftest::write_text(dir / "cpu_samples.csv", "epoch_ms,subject,cpu_core_equiv_pct\n");
  std::filesystem::create_directories(dir / "flows");
  try {
    rf::load_run_bundle(dir / "run.manifest");
    FAIL();
  } catch (const rf::IngestError& e) {
    EXPECT_NE(std::string(e.what()).find("du_logs.tsv"), std::string::npos);
  }
}

TEST(Bundle, ParseOfRenderedArtifactsIsExact) {
  rftest::TempDir dir("ingest");
  auto truth = rftest::simple_truth(rf::StackId::SRK, {{1, 103.34, 349.31, 1.7}, {3, 66.44, 329.73, 0.98}});
  truth.noise_rel_sigma = 0.02;
  truth.noise_seed = 99;
  const auto run = rf::expand(truth)[1];
  const auto path = rf::generate_bundle_files(run, dir.path() / "srk_n3");
  const auto bundle = rf::load_run_bundle(path);
  EXPECT_EQ(bundle.manifest.ue_count, 3);
  EXPECT_EQ(bundle.manifest.du_cores, run.manifest.du_cores);
  EXPECT_EQ(bundle.manifest.phy, run.manifest.phy);
  EXPECT_EQ(*bundle.manifest.start_epoch_ms, *run.manifest.start_epoch_ms);
  ASSERT_EQ(bundle.flows.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_LE(rftest::rel_err(bundle.flows[i].goodput_bps, run.per_ue_goodput_bps[i]), 1e-9);
  }
  EXPECT_TRUE(bundle.warnings.empty());
}
