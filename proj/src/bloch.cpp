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

#include "bcl/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bcl {

BlochParams::BlochParams(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw ContractViolation("alpha must be a finite positive number");
}

SampleGrid::SampleGrid(std::vector<double> radii, std::vector<double> angles)
    : radii_(std::move(radii)), angles_(std::move(angles)) {
  if (radii_.empty() || angles_.empty()) throw ContractViolation("sample grid must be non-empty");
  for (std::size_t k = 0; k < radii_.size(); ++k) {
    if (!(radii_[k] >= 0.0)) throw ContractViolation("grid radii must be non-negative");
    if (k > 0 && !(radii_[k] > radii_[k - 1]))
      throw ContractViolation("grid radii must be strictly increasing");
  }
  if (!(radii_.back() < 1.0)) throw DomainError("grid radii must lie in [0, 1)");
  std::vector<double> sorted = angles_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ContractViolation("grid angles must be distinct");
  for (double a : sorted) {
    if (!(a >= 0.0 && a < 2.0 * std::numbers::pi))
      throw ContractViolation("grid angles must lie in [0, 2 pi)");
  }
}

SampleGrid default_grid(int n_radial, int n_angular, double r_max) {
  if (n_radial < 1 || n_angular < 1) throw ContractViolation("grid counts must be >= 1");
  if (!(r_max < 1.0)) throw DomainError("r_max must be < 1");
  if (!(r_max > 0.0)) throw ContractViolation("r_max must be > 0");
  const double base = 1.0 - r_max;
  std::vector<double> radii(static_cast<std::size_t>(n_radial) + 1);
  radii[0] = 0.0;
  for (int k = 1; k < n_radial; ++k)
    radii[k] = 1.0 - std::pow(base, static_cast<double>(k) / n_radial);
  radii[n_radial] = r_max;
  std::vector<double> angles(static_cast<std::size_t>(n_angular));
  for (int j = 0; j < n_angular; ++j)
    angles[j] = 2.0 * std::numbers::pi * (static_cast<double>(j) / n_angular);
  return SampleGrid(std::move(radii), std::move(angles));
}

std::vector<GridRecord> seminorm_records(const PowerSeries& f, BlochParams p,
                                         const SampleGrid& g) {
  const PowerSeries df = ps_derivative(f);
  std::vector<GridRecord> out;
  out.reserve(g.size());
  for (double r : g.radii()) {
    const double weight = std::pow(1.0 - r * r, p.alpha());
    for (double theta : g.angles()) {
      const auto ev = ps_eval(df, std::polar(r, theta));
      GridRecord rec;
      rec.r = r;
      rec.theta = theta;
      rec.weight = weight;
      rec.abs_derivative = std::abs(ev.value);
      rec.product = weight * rec.abs_derivative;
      rec.tail = ev.tail_estimate;
      rec.excluded = ev.tail_estimate > kTailThreshold * (1.0 + rec.abs_derivative);
      out.push_back(rec);
    }
  }
  return out;
}

SeminormEstimate seminorm_estimate(const PowerSeries& f, BlochParams p, const SampleGrid& g) {
  SeminormEstimate est;
  bool first = true;
  for (const auto& rec : seminorm_records(f, p, g)) {
    if (rec.excluded) {
      ++est.excluded_points;
      continue;
    }
    est.max_tail = std::max(est.max_tail, rec.tail);
    if (first || rec.product > est.value) {
      est.value = rec.product;
      est.argmax = std::polar(rec.r, rec.theta);
      first = false;
    }
  }
  return est;
}

double bloch_norm(const PowerSeries& f, BlochParams p, const SampleGrid& g) {
  return std::abs(f[0]) + seminorm_estimate(f, p, g).value;
}

double growth_bound(BlochParams p, double r, double seminorm, double f0) {
  if (!(r < 1.0)) throw DomainError("growth_bound: |z| must be < 1");
  if (!(r >= 0.0) || !(seminorm >= 0.0) || !(f0 >= 0.0))
    throw ContractViolation("growth_bound: arguments must be non-negative");
  const double a = p.alpha();
  if (a < 1.0) return f0 + seminorm / (1.0 - a);
  if (a == 1.0) return f0 + 0.5 * seminorm * std::log((1.0 + r) / (1.0 - r));
  return f0 + seminorm / (a - 1.0) * (std::pow(1.0 - r, 1.0 - a) - 1.0);
}

GrowthVerdict growth_check(const PowerSeries& f, BlochParams p, const SampleGrid& g) {
  const SeminormEstimate est = seminorm_estimate(f, p, g);
  const double f0 = std::abs(f[0]);
  GrowthVerdict v;
  bool first = true;
  for (double r : g.radii()) {
    const double bound = growth_bound(p, r, est.value, f0);
    const double tail_scale = growth_bound(p, r, 1.0, 0.0);
    for (double theta : g.angles()) {
      const Complex z = std::polar(r, theta);
      const auto ev = ps_eval(f, z);
      const double mod = std::abs(ev.value);
      if (ev.tail_estimate > kTailThreshold * (1.0 + mod)) {
        ++v.excluded_points;
        continue;
      }
      ++v.checked_points;
      const double margin = bound - mod;
      const double slack = 1e-8 + ev.tail_estimate + est.max_tail * tail_scale;
      if (first || margin < v.worst_margin) {
        v.worst_margin = margin;
        v.worst_point = z;
        first = false;
      }
      if (margin < -slack) v.passed = false;
    }
  }
  return v;
}

double grid_sup_modulus(const PowerSeries& f, const SampleGrid& g) {
  double m = 0.0;
  for (double r : g.radii())
    for (double theta : g.angles()) m = std::max(m, std::abs(ps_eval(f, std::polar(r, theta)).value));
  return m;
}

}  // namespace bcl
