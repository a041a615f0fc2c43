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

// Shared helpers for the test binaries: seeded generators and comparisons.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "bcl/series.hpp"

namespace bcl::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline int uniform_int(std::mt19937_64& g, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(g);
}

inline Complex random_complex(std::mt19937_64& g, double radius = 1.0) {
  // Uniform in the square, rejected to the disk of the given radius.
  for (;;) {
    const Complex c(uniform(g, -1.0, 1.0), uniform(g, -1.0, 1.0));
    if (std::abs(c) <= 1.0) return radius * c;
  }
}

/// Random polynomial of degree <= max_degree, zero-padded to `order`.
inline PowerSeries random_polynomial(std::mt19937_64& g, int max_degree, std::size_t order,
                                     bool vanish_at_zero, double radius = 1.0) {
  const int degree = uniform_int(g, vanish_at_zero ? 1 : 0, max_degree);
  std::vector<Complex> c(order + 1, Complex{});
  for (int n = vanish_at_zero ? 1 : 0; n <= degree && n <= static_cast<int>(order); ++n)
    c[n] = random_complex(g, radius);
  return PowerSeries(std::move(c));
}

inline double max_coeff_diff(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t n = std::min(f.order(), g.order());
  double d = 0.0;
  for (std::size_t k = 0; k <= n; ++k) d = std::max(d, std::abs(f[k] - g[k]));
  return d;
}

inline PowerSeries real_series(std::initializer_list<double> xs) {
  std::vector<Complex> c(xs.begin(), xs.end());
  return PowerSeries(std::move(c));
}

}  // namespace bcl::testing
