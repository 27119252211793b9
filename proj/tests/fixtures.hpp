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

#ifndef RANFORENSICS_TESTS_FIXTURES_HPP_
#define RANFORENSICS_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "ranforensics/synth.hpp"

namespace rftest {

// Simple zero-noise truth: per-N goodput, DU CPU and RTF.
struct Point {
  std::int64_t n;
  double goodput_mbps;
  double du_cpu;
  double rtf;
};

inline ranforensics::GroundTruth simple_truth(ranforensics::StackId stack, const std::vector<Point>& points) {
  ranforensics::GroundTruth g;
  g.stack_id = stack;
  if (stack == ranforensics::StackId::SRK) g.phy.n_ldpc_threads = 1;
  std::map<std::int64_t, double> goodput;
  for (const auto& p : points) {
    ranforensics::RunModel run;
    run.ue_count = p.n;
    run.du_cpu = {p.du_cpu, p.du_cpu + 2.0};
    run.cu_cpu = {10.0, 12.0};
    run.sys_cpu = {400.0, 420.0};
    run.rtf = p.rtf;
    run.ldpc_per_call_us = ranforensics::SeriesModel{260.0, 270.0};
    if (stack == ranforensics::StackId::SRK) {
      run.gpu_util = ranforensics::SeriesModel{20.0, 22.0};
      run.gpu_power_w = ranforensics::SeriesModel{25.0, 26.0};
    }
    g.runs.push_back(run);
    if (p.n > 0) goodput[p.n] = p.goodput_mbps;
  }
  g.goodput_mbps = goodput;
  return g;
}

}  // namespace rftest

#endif  // RANFORENSICS_TESTS_FIXTURES_HPP_
