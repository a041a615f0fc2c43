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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "bcl/errors.hpp"

namespace bcl {

using Complex = std::complex<double>;

/// Truncation order used when a caller does not pick one.
inline constexpr std::size_t kDefaultOrder = 256;

/// Truncated Taylor series c_0 + c_1 z + ... + c_N z^N on the unit disk.
///
/// Values are immutable once built and every stored coefficient is finite.
/// Binary operations truncate to the shorter of the two orders.
class PowerSeries {
 public:
  /// Zero series of the given order.
  explicit PowerSeries(std::size_t order = 0);
  /// Takes ownership of the coefficients; throws ContractViolation if the
  /// list is empty or holds a non-finite value.
  explicit PowerSeries(std::vector<Complex> coeffs);

  static PowerSeries monomial(std::size_t degree, std::size_t order,
                              Complex scale = 1.0);
  static PowerSeries constant(Complex value, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t n) const { return coeffs_[n]; }

  /// Same function at a different order: drops or zero-pads coefficients.
  PowerSeries resized(std::size_t order) const;
  /// f(s z), i.e. c_n -> c_n s^n.
  PowerSeries dilated(double s) const;
  /// Largest |c_n| over the whole series.
  double max_abs_coeff() const;

  friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator*(Complex c, const PowerSeries& f);
  friend bool operator==(const PowerSeries& f, const PowerSeries& g) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Shifted factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
Complex pochhammer(Complex a, int n);

/// Taylor coefficients of (1 - b w)^{-beta} up to order N: ((beta)_n / n!) b^n.
PowerSeries binomial_series(double beta, Complex b, std::size_t order);

/// Cauchy product truncated to min(order f, order g).
PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g);

/// exp(u); u must have a zero constant term.
PowerSeries ps_exp(const PowerSeries& u);

/// Antiderivative vanishing at 0. The order grows by one.
PowerSeries ps_integrate(const PowerSeries& f);

/// f'. Requires order >= 1; the order drops by one.
PowerSeries ps_derivative(const PowerSeries& f);

/// f(z) / z by coefficient shift. Throws DomainError if f(0) != 0.
PowerSeries ps_div_by_z(const PowerSeries& f);

struct Evaluation {
  Complex value;
  // M |z|^{N+1} / (1 - |z|), M = max |c_n| over the last 16 coefficients.
  // A heuristic majorant of the dropped tail, not a certified bound.
  double tail_estimate = 0.0;
};

/// Horner evaluation of the truncation at |z| < 1.
Evaluation ps_eval(const PowerSeries& f, Complex z);

}  // namespace bcl
