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

#ifndef RANFORENSICS_FIT_HPP_
#define RANFORENSICS_FIT_HPP_

#include <cmath>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ranforensics/error.hpp"

namespace ranforensics {

template <typename Scalar>
struct ScalingPointT {
  Scalar n = 1;       // UE count
  Scalar t_mbps = 0;  // aggregate goodput
};
using ScalingPoint = ScalingPointT<double>;

// T(N) = a * N^b, fitted by ordinary least squares on (ln N, ln T).
template <typename Scalar>
struct PowerLawFitT {
  Scalar a = 1;
  Scalar b = 0;
  Scalar r2_log = 1;
};
using PowerLawFit = PowerLawFitT<double>;

template <typename Scalar>
PowerLawFitT<Scalar> fit_power_law(std::span<const ScalingPointT<Scalar>> points) {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, 2>;

  std::set<Scalar> distinct_n;
  for (const auto& p : points) {
    if (!(p.n >= Scalar(1))) throw FitError("UE counts must be at least 1");
    if (!(p.t_mbps > Scalar(0))) throw FitError("goodput must be strictly positive for a log-space fit");
    distinct_n.insert(p.n);
  }
  if (distinct_n.size() < 2) throw FitError("power-law fit needs at least two distinct UE counts");

  const auto rows = static_cast<Eigen::Index>(points.size());
  Matrix design(rows, 2);
  Vector log_t(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    design(i, 0) = Scalar(1);
    design(i, 1) = std::log(points[static_cast<std::size_t>(i)].n);
    log_t(i) = std::log(points[static_cast<std::size_t>(i)].t_mbps);
  }

  const Scalar mean_log_t = log_t.mean();
  const Scalar ss_tot = (log_t.array() - mean_log_t).square().sum();
  PowerLawFitT<Scalar> fit;
  if (ss_tot == Scalar(0)) {
    // Flat data: exact fit with zero exponent.
    fit.a = points.front().t_mbps;
    fit.b = Scalar(0);
    fit.r2_log = Scalar(1);
    return fit;
  }

  const Eigen::Matrix<Scalar, 2, 1> coef = design.colPivHouseholderQr().solve(log_t);
  const Scalar ss_res = (log_t - design * coef).squaredNorm();
  fit.a = std::exp(coef(0));
  fit.b = coef(1);
  fit.r2_log = Scalar(1) - ss_res / ss_tot;
  return fit;
}

PowerLawFit fit_power_law(std::span<const ScalingPoint> points);

template <typename Scalar>
Scalar predict(const PowerLawFitT<Scalar>& fit, Scalar n) {
  if (!(n >= Scalar(1))) throw FitError("prediction needs n >= 1");
  return fit.a * std::pow(n, fit.b);
}

double collapse_ratio(double t_at_1, double t_at_nmax);

// Parses "1:114.59,3:65.21" into scaling points.
std::vector<ScalingPoint> parse_points(const std::string& spec);

}  // namespace ranforensics

#endif  // RANFORENSICS_FIT_HPP_
