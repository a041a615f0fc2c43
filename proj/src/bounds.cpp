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

#include "bcl/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "bcl/errors.hpp"

namespace bcl {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Bounded: return "Bounded";
    case Verdict::Unbounded: return "Unbounded";
    case Verdict::Compact: return "Compact";
    case Verdict::EssentialNormZero: return "EssentialNormZero";
    case Verdict::NotCovered: return "NotCovered";
  }
  return "?";
}

bool Classification::has(Verdict v) const {
  return std::find(verdicts.begin(), verdicts.end(), v) != verdicts.end();
}

std::string Classification::label() const {
  std::string out;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (i) out += '+';
    out += to_string(verdicts[i]);
  }
  return out;
}

std::string Classification::source() const {
  std::string out;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (i) out += " / ";
    out += sources[i];
  }
  return out;
}

Classification classify(double alpha, double beta) {
  using V = Verdict;
  if (!(alpha > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta))
    return {{V::NotCovered}, {"alpha > 0 required"}};
  if (beta > alpha) return {{V::Unbounded}, {"Ex 2.6"}};
  if (beta == alpha) {
    if (alpha >= 1.0) return {{V::Unbounded}, {"Ex 2.7"}};
    return {{V::Bounded, V::EssentialNormZero}, {"Thm 2.2", "Thm 4.4"}};
  }
  // beta < alpha from here on.
  if (alpha < 1.0) return {{V::Bounded, V::Compact}, {"Thm 2.2", "Thm 3.4"}};
  if (alpha == 1.0) return {{V::Bounded, V::Compact}, {"Thm 2.4", "Thm 3.4"}};
  if (beta < 1.0) return {{V::Bounded, V::Compact}, {"Thm 2.3", "Thm 3.4"}};
  if (beta == 1.0) return {{V::Bounded, V::EssentialNormZero}, {"Thm 2.3", "Thm 4.5"}};
  return {{V::Unbounded}, {"Ex 2.8"}};
}

namespace {

enum class Regime { SubUnit, SuperUnit, Unit };

Regime bounded_regime(double alpha, double beta) {
  if (!(alpha > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta))
    throw DomainError("bound_constant: alpha must be a finite positive number");
  if (alpha < 1.0 && beta <= alpha) return Regime::SubUnit;
  if (alpha > 1.0 && beta <= 1.0) return Regime::SuperUnit;
  if (alpha == 1.0 && beta < 1.0) return Regime::Unit;
  throw DomainError("bound_constant: (alpha, beta) is not a bounded regime");
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// sum_{k=1..c} C(c, k) (-t)^{k-1}; equals (1 - (1 - t)^c) / t for t > 0.
double alternating_binomial_sum(int c, double t) {
  double s = 0.0;
  double power = 1.0;
  for (int k = 1; k <= c; ++k) {
    s += binomial(c, k) * power;
    power *= -t;
  }
  return s;
}

// log((1 + t) / (1 - t)) / t with its value 2 at t = 0.
double log_ratio_over_t(double t) {
  if (t < 1e-6) return 2.0 + 2.0 * t * t / 3.0;
  return 2.0 * std::atanh(t) / t;
}

double boundary_limit(double alpha, double beta, Regime r) {
  switch (r) {
    case Regime::SubUnit:
      return beta == alpha ? std::pow(2.0, alpha) / (1.0 - alpha) : 0.0;
    case Regime::SuperUnit:
      return beta == 1.0 ? std::pow(2.0, alpha) / (alpha - 1.0) : 0.0;
    case Regime::Unit:
      return 0.0;
  }
  return 0.0;
}

constexpr double kSupUpper = 1.0 - 1e-9;
constexpr double kGoldenTol = 1e-10;

}  // namespace

double bound_profile(double alpha, double beta, double t) {
  const Regime r = bounded_regime(alpha, beta);
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("bound_profile: t must lie in [0, 1)");
  switch (r) {
    case Regime::SubUnit:
      return std::pow(1.0 + t, alpha) * std::pow(1.0 - t, alpha - beta) / (1.0 - alpha);
    case Regime::SuperUnit: {
      const int c = static_cast<int>(std::ceil(alpha));
      return std::pow(1.0 + t, alpha) * std::pow(1.0 - t, 1.0 - beta) / (alpha - 1.0) *
             alternating_binomial_sum(c, t);
    }
    case Regime::Unit:
      return std::pow(1.0 - t, 1.0 - beta) * log_ratio_over_t(t);
  }
  return 0.0;
}

BoundConstant bound_constant(double alpha, double beta) {
  const Regime regime = bounded_regime(alpha, beta);
  auto f = [&](double t) { return bound_profile(alpha, beta, t); };

  // Coarse scan: uniform on [0, 1) plus points clustered toward t = 1.
  std::vector<double> ts;
  constexpr int kUniform = 2000;
  constexpr int kClustered = 400;
  for (int i = 0; i <= kUniform; ++i) ts.push_back(kSupUpper * i / kUniform);
  for (int i = 0; i <= kClustered; ++i) ts.push_back(1.0 - std::pow(10.0, -1.0 - 8.0 * i / kClustered));
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::size_t best = 0;
  double best_val = f(ts[0]);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    const double v = f(ts[i]);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }

  // Golden-section refinement inside the bracketing cell.
  double lo = ts[best > 0 ? best - 1 : 0];
  double hi = ts[std::min(best + 1, ts.size() - 1)];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > kGoldenTol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  BoundConstant out{best_val, ts[best], false};
  for (double t : {x1, x2}) {
    const double v = f(t);
    if (v > out.value) out = {v, t, false};
  }

  const double limit = boundary_limit(alpha, beta, regime);
  if (limit >= out.value) out = {limit, 1.0, true};
  return out;
}

const char* to_string(Counterexample c) {
  switch (c) {
    case Counterexample::Ex26: return "Ex26";
    case Counterexample::Ex27: return "Ex27";
    case Counterexample::Ex28: return "Ex28";
  }
  return "?";
}

std::optional<Counterexample> parse_counterexample(std::string_view name) {
  if (name == "Ex26") return Counterexample::Ex26;
  if (name == "Ex27") return Counterexample::Ex27;
  if (name == "Ex28") return Counterexample::Ex28;
  return std::nullopt;
}

const char* to_string(ProbeVerdict v) {
  return v == ProbeVerdict::Diverges ? "diverges" : "bounded";
}

namespace {

// Least squares for y ~ X b with k columns via normal equations.
template <std::size_t K>
std::array<double, K> least_squares(const std::vector<std::array<double, K>>& rows,
                                    const std::vector<double>& y) {
  std::array<std::array<double, K + 1>, K> a{};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < K; ++i) {
      for (std::size_t j = 0; j < K; ++j) a[i][j] += rows[r][i] * rows[r][j];
      a[i][K] += rows[r][i] * y[r];
    }
  }
  for (std::size_t col = 0; col < K; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < K; ++i)
      if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
    std::swap(a[col], a[piv]);
    if (a[col][col] == 0.0) throw ContractViolation("least squares: singular design");
    for (std::size_t i = 0; i < K; ++i) {
      if (i == col) continue;
      const double m = a[i][col] / a[col][col];
      for (std::size_t j = col; j <= K; ++j) a[i][j] -= m * a[col][j];
    }
  }
  std::array<double, K> b{};
  for (std::size_t i = 0; i < K; ++i) b[i] = a[i][K] / a[i][i];
  return b;
}

}  // namespace

ProbeReport counterexample_probe(double alpha, double beta, Counterexample which,
                                 std::span<const double> t_list) {
  if (!(alpha > 0.0) || !std::isfinite(beta))
    throw DomainError("counterexample_probe: alpha must be positive");
  switch (which) {
    case Counterexample::Ex26:
      if (!(beta > alpha)) throw DomainError("Ex26 requires beta > alpha");
      break;
    case Counterexample::Ex27:
      if (!(beta >= alpha && alpha >= 1.0)) throw DomainError("Ex27 requires beta >= alpha >= 1");
      break;
    case Counterexample::Ex28:
      if (!(beta > 1.0)) throw DomainError("Ex28 requires beta > 1");
      break;
  }
  const std::size_t min_points = which == Counterexample::Ex27 ? 3 : 2;
  if (t_list.size() < min_points) throw ContractViolation("counterexample_probe: too few points");
  for (std::size_t i = 0; i < t_list.size(); ++i) {
    if (!(t_list[i] > 0.0 && t_list[i] < 1.0))
      throw DomainError("counterexample_probe: t must lie in (0, 1)");
    if (i > 0 && !(t_list[i] > t_list[i - 1]))
      throw ContractViolation("counterexample_probe: t must be increasing");
  }

  ProbeReport rep;
  std::vector<double> xs, ys;
  for (double t : t_list) {
    const double x = -std::log1p(-t);
    double v = 0.0;
    switch (which) {
      case Counterexample::Ex26:
        v = std::pow(1.0 + t, alpha) * std::exp(x * (beta - alpha));
        break;
      case Counterexample::Ex27:
        v = std::pow(1.0 + t, alpha) * std::exp(x * (beta - alpha)) * x / t;
        break;
      case Counterexample::Ex28:
        v = std::pow(1.0 + t, alpha + 1.0) * std::exp(x * (beta - 1.0));
        break;
    }
    rep.samples.emplace_back(t, v);
    xs.push_back(x);
    ys.push_back(std::log(v));
  }

  if (which == Counterexample::Ex27) {
    std::vector<std::array<double, 3>> rows;
    for (double x : xs) rows.push_back({1.0, x, std::log(x)});
    const auto b = least_squares<3>(rows, ys);
    rep.fitted_exponent = b[1];
    rep.log_exponent = b[2];
  } else {
    std::vector<std::array<double, 2>> rows;
    for (double x : xs) rows.push_back({1.0, x});
    rep.fitted_exponent = least_squares<2>(rows, ys)[1];
  }
  const bool diverges = rep.fitted_exponent > kDivergenceThreshold ||
                        (rep.log_exponent && *rep.log_exponent > kLogCorrectionThreshold);
  rep.verdict = diverges ? ProbeVerdict::Diverges : ProbeVerdict::Bounded;
  return rep;
}

std::vector<double> default_probe_abscissae() {
  constexpr int kCount = 25;
  std::vector<double> t(kCount);
  for (int i = 0; i < kCount; ++i) t[i] = 1.0 - std::pow(10.0, -(1.0 + 3.0 * i / (kCount - 1)));
  return t;
}

double one_minus_power_bound(long long n) {
  if (n < 1) throw ContractViolation("one_minus_power_bound: n must be >= 1");
  const double nn = static_cast<double>(n);
  const double x = std::numbers::ln2 / nn;
  const double y = std::numbers::pi / (2.0 * nn);
  const double half = std::sin(y / 2.0);
  const double cos_minus_one = -2.0 * half * half;
  const double s = std::sin(y);
  return std::abs(std::expm1(x)) + std::exp(x) * std::sqrt(cos_minus_one * cos_minus_one + s * s);
}

}  // namespace bcl
