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

#include "bcl/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bcl {
namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

constexpr std::size_t kTailWindow = 16;

}  // namespace

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1, Complex{}) {}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ContractViolation("power series needs at least one coefficient");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!finite(coeffs_[n]))
      throw ContractViolation("non-finite coefficient at index " + std::to_string(n));
  }
}

PowerSeries PowerSeries::monomial(std::size_t degree, std::size_t order, Complex scale) {
  std::vector<Complex> c(order + 1, Complex{});
  if (degree <= order) c[degree] = scale;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::constant(Complex value, std::size_t order) {
  return monomial(0, order, value);
}

PowerSeries PowerSeries::resized(std::size_t order) const {
  std::vector<Complex> c(order + 1, Complex{});
  std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::dilated(double s) const {
  std::vector<Complex> c(coeffs_);
  double power = 1.0;
  for (auto& cn : c) {
    cn *= power;
    power *= s;
  }
  return PowerSeries(std::move(c));
}

double PowerSeries::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t n = std::min(f.order(), g.order()) + 1;
  std::vector<Complex> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = f.coeffs_[i] + g.coeffs_[i];
  return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
  return f + Complex(-1.0) * g;
}

PowerSeries operator*(Complex k, const PowerSeries& f) {
  std::vector<Complex> c(f.coeffs_);
  for (auto& cn : c) cn *= k;
  return PowerSeries(std::move(c));
}

Complex pochhammer(Complex a, int n) {
  if (n < 0) throw ContractViolation("pochhammer: n must be non-negative");
  Complex p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + static_cast<double>(k);
  return p;
}

PowerSeries binomial_series(double beta, Complex b, std::size_t order) {
  if (!std::isfinite(beta) || !finite(b))
    throw ContractViolation("binomial_series: non-finite parameter");
  if (std::abs(b) > 1.0 + 1e-12)
    throw ContractViolation("binomial_series: |b| must not exceed 1");
  std::vector<Complex> c(order + 1);
  c[0] = 1.0;
  for (std::size_t n = 0; n < order; ++n) {
    const double nn = static_cast<double>(n);
    c[n + 1] = c[n] * b * (beta + nn) / (nn + 1.0);
  }
  return PowerSeries(std::move(c));
}

PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  std::vector<Complex> c(order + 1, Complex{});
  const auto fc = f.coeffs();
  const auto gc = g.coeffs();
  for (std::size_t i = 0; i <= order; ++i) {
    if (fc[i] == Complex{}) continue;
    for (std::size_t j = 0; i + j <= order; ++j) c[i + j] += fc[i] * gc[j];
  }
  return PowerSeries(std::move(c));
}

PowerSeries ps_exp(const PowerSeries& u) {
  if (u[0] != Complex{}) throw ContractViolation("ps_exp: constant term must be zero");
  const std::size_t order = u.order();
  std::vector<Complex> e(order + 1, Complex{});
  e[0] = 1.0;
  for (std::size_t m = 1; m <= order; ++m) {
    Complex acc{};
    for (std::size_t k = 1; k <= m; ++k) acc += static_cast<double>(k) * u[k] * e[m - k];
    e[m] = acc / static_cast<double>(m);
  }
  return PowerSeries(std::move(e));
}

PowerSeries ps_integrate(const PowerSeries& f) {
  std::vector<Complex> c(f.order() + 2, Complex{});
  for (std::size_t n = 1; n < c.size(); ++n) c[n] = f[n - 1] / static_cast<double>(n);
  return PowerSeries(std::move(c));
}

PowerSeries ps_derivative(const PowerSeries& f) {
  if (f.order() < 1) throw ContractViolation("ps_derivative: order must be at least 1");
  std::vector<Complex> c(f.order());
  for (std::size_t n = 0; n < c.size(); ++n) c[n] = static_cast<double>(n + 1) * f[n + 1];
  return PowerSeries(std::move(c));
}

PowerSeries ps_div_by_z(const PowerSeries& f) {
  if (f[0] != Complex{}) throw DomainError("f(0) != 0: function is not in H_0");
  if (f.order() == 0) return PowerSeries(0);
  auto c = f.coeffs();
  return PowerSeries(std::vector<Complex>(c.begin() + 1, c.end()));
}

Evaluation ps_eval(const PowerSeries& f, Complex z) {
  if (!finite(z)) throw ContractViolation("ps_eval: non-finite point");
  const double r = std::abs(z);
  if (r >= 1.0) throw DomainError("ps_eval: point must lie in the open unit disk");

  const auto c = f.coeffs();
  std::size_t top = c.size();
  while (top > 0 && c[top - 1] == Complex{}) --top;
  Complex acc{};
  for (std::size_t n = top; n-- > 0;) acc = acc * z + c[n];

  const std::size_t first = c.size() > kTailWindow ? c.size() - kTailWindow : 0;
  double m = 0.0;
  for (std::size_t n = first; n < c.size(); ++n) m = std::max(m, std::abs(c[n]));
  const double tail =
      m == 0.0 ? 0.0 : m * std::pow(r, static_cast<double>(f.order() + 1)) / (1.0 - r);
  return {acc, tail};
}

}  // namespace bcl
