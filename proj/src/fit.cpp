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

#include "ranforensics/fit.hpp"

#include <fmt/format.h>

#include "ranforensics/text.hpp"

namespace ranforensics {

PowerLawFit fit_power_law(std::span<const ScalingPoint> points) {
  return fit_power_law<double>(points);
}

double collapse_ratio(double t_at_1, double t_at_nmax) {
  if (!(t_at_1 > 0) || !(t_at_nmax > 0)) throw FitError("collapse ratio needs positive goodputs");
  return t_at_1 / t_at_nmax;
}

std::vector<ScalingPoint> parse_points(const std::string& spec) {
  std::vector<ScalingPoint> points;
  for (auto item : text::split(spec, ',')) {
    item = text::trim(item);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw FitError(fmt::format("point '{}' is not n:t", item));
    }
    const auto n = text::parse_double(text::trim(item.substr(0, colon)));
    const auto t = text::parse_double(text::trim(item.substr(colon + 1)));
    if (!n || !t) throw FitError(fmt::format("point '{}' is not numeric", item));
    points.push_back({*n, *t});
  }
  return points;
}

}  // namespace ranforensics
