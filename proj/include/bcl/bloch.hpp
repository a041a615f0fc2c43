// Copyright (c) 2026 The bcl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "bcl/series.hpp"

namespace bcl {

/// The weight exponent alpha of the alpha-Bloch space; always > 0.
class BlochParams {
 public:
  explicit BlochParams(double alpha);
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

/// Polar sample points r e^{i theta} used to approximate sup over the disk.
class SampleGrid {
 public:
  /// radii strictly increasing in [0, 1), angles distinct in [0, 2 pi).
  SampleGrid(std::vector<double> radii, std::vector<double> angles);

  const std::vector<double>& radii() const { return radii_; }
  const std::vector<double>& angles() const { return angles_; }
  double r_max() const { return radii_.back(); }
  std::size_t size() const { return radii_.size() * angles_.size(); }

 private:
  std::vector<double> radii_;
  std::vector<double> angles_;
};

inline constexpr int kDefaultRadial = 64;
inline constexpr int kDefaultAngular = 128;
inline constexpr double kDefaultRMax = 0.999;

/// Radii r_k = 1 - (1 - r_max)^{k / n_radial}, k = 0..n_radial (geometric
/// clustering toward the circle, r_0 = 0), uniform angles 2 pi j / n_angular.
/// Doubling both counts yields a grid that contains the original points
/// bit-for-bit.
SampleGrid default_grid(int n_radial = kDefaultRadial, int n_angular = kDefaultAngular,
                        double r_max = kDefaultRMax);

/// Grid point is dropped when tail_estimate > kTailThreshold (1 + |f'(z)|).
inline constexpr double kTailThreshold = 1e-6;

struct SeminormEstimate {
  double value = 0.0;           // max over kept grid points of (1-|z|^2)^alpha |f'(z)|
  Complex argmax;
  double max_tail = 0.0;        // largest tail estimate among kept points
  std::size_t excluded_points = 0;
};

/// Grid lower bound of sup (1-|z|^2)^alpha |f'(z)|.
SeminormEstimate seminorm_estimate(const PowerSeries& f, BlochParams p, const SampleGrid& g);

/// |f(0)| + seminorm estimate.
double bloch_norm(const PowerSeries& f, BlochParams p, const SampleGrid& g);

/// Growth majorant of |f(z)| at |z| = r for f with the given seminorm and |f(0)|:
///   alpha < 1: f0 + s / (1 - alpha)
///   alpha = 1: f0 + (s / 2) log((1 + r) / (1 - r))
///   alpha > 1: f0 + s / (alpha - 1) ((1 - r)^{1 - alpha} - 1)
double growth_bound(BlochParams p, double r, double seminorm, double f0);

struct GrowthVerdict {
  bool passed = true;
  double worst_margin = 0.0;  // min over checked points of bound - |f(z)|
  Complex worst_point;
  std::size_t checked_points = 0;
  std::size_t excluded_points = 0;
};

/// Checks |f(z)| <= growth_bound at every grid point, with the seminorm
/// estimated on the same grid. Slack: 1e-8 plus the reported tails.
GrowthVerdict growth_check(const PowerSeries& f, BlochParams p, const SampleGrid& g);

/// One row of the per-point seminorm table (CSV export).
struct GridRecord {
  double r = 0.0;
  double theta = 0.0;
  double weight = 0.0;
  double abs_derivative = 0.0;
  double product = 0.0;
  double tail = 0.0;
  bool excluded = false;
};

std::vector<GridRecord> seminorm_records(const PowerSeries& f, BlochParams p,
                                         const SampleGrid& g);

/// max |f(z)| over the grid; stands in for the sup norm of a bounded f.
double grid_sup_modulus(const PowerSeries& f, const SampleGrid& g);

}  // namespace bcl
