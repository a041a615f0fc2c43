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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcl {

enum class Verdict { Bounded, Unbounded, Compact, EssentialNormZero, NotCovered };

const char* to_string(Verdict v);

/// Verdicts for C_beta on the alpha-Bloch space with the result each one
/// comes from, e.g. {Bounded, EssentialNormZero} / {"Thm 2.3", "Thm 4.5"}.
struct Classification {
  std::vector<Verdict> verdicts;
  std::vector<std::string> sources;

  bool has(Verdict v) const;
  /// "Bounded+EssentialNormZero"
  std::string label() const;
  /// "Thm 2.3 / Thm 4.5"
  std::string source() const;
};

/// Total on alpha > 0 and real beta; alpha <= 0 gives NotCovered.
Classification classify(double alpha, double beta);

struct BoundConstant {
  double value = 0.0;
  double argmax_t = 0.0;             // 1.0 when the sup is the t -> 1 limit
  bool attained_at_boundary = false;
};

/// Explicit constant K with ||C_beta f|| <= K ||f|| for the bounded regimes
/// (beta <= alpha < 1, beta <= 1 < alpha, beta < alpha = 1), as a 1-D sup
/// over t = |z| in [0, 1). Throws DomainError elsewhere.
BoundConstant bound_constant(double alpha, double beta);

/// The integrand of bound_constant at t (t = 0 handled by its limit).
double bound_profile(double alpha, double beta, double t);

enum class Counterexample { Ex26, Ex27, Ex28 };

const char* to_string(Counterexample c);
std::optional<Counterexample> parse_counterexample(std::string_view name);

enum class ProbeVerdict { Diverges, Bounded };

const char* to_string(ProbeVerdict v);

struct ProbeReport {
  std::vector<std::pair<double, double>> samples;  // (t, value), t increasing
  double fitted_exponent = 0.0;                    // slope against -log(1 - t)
  std::optional<double> log_exponent;              // Ex27 only: weight of log(-log(1 - t))
  ProbeVerdict verdict = ProbeVerdict::Bounded;
};

inline constexpr double kDivergenceThreshold = 0.05;
inline constexpr double kLogCorrectionThreshold = 0.5;

/// Samples the blow-up quantity of the chosen counterexample along z = t and
/// fits log(value) = c + p (-log(1 - t)) [+ q log(-log(1 - t)) for Ex27].
///   Ex26 (beta > alpha):          (1+t)^alpha / (1-t)^(beta-alpha)
///   Ex27 (beta >= alpha >= 1):    the same times |log(1-t)| / t
///   Ex28 (beta > 1):              (1+t)^(alpha+1) / (1-t)^(beta-1)
/// Diverges iff p > 0.05, or for Ex27 also when q > 0.5.
ProbeReport counterexample_probe(double alpha, double beta, Counterexample which,
                                 std::span<const double> t_list);

/// 25 points 1 - 10^{-s}, s evenly spaced in [1, 4] (t = 0.9 .. 0.9999).
std::vector<double> default_probe_abscissae();

/// |1 - exp(ln 2 / n)| + exp(ln 2 / n) ((cos(pi/2n) - 1)^2 + sin^2(pi/2n))^{1/2},
/// a z-independent majorant of |1 - (1 - b z)^{1/n}| on the disk.
double one_minus_power_bound(long long n);

}  // namespace bcl
