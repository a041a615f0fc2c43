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

#include "bcl/compactness.hpp"

#include <algorithm>
#include <cmath>

namespace bcl {

const char* to_string(NullFamilyKind k) {
  return k == NullFamilyKind::Monomial ? "monomial" : "dilation";
}

std::optional<NullFamilyKind> parse_null_family_kind(std::string_view name) {
  if (name == "monomial") return NullFamilyKind::Monomial;
  if (name == "dilation") return NullFamilyKind::Dilation;
  return std::nullopt;
}

const char* to_string(TrendVerdict v) {
  return v == TrendVerdict::CompactConsistent ? "compact-consistent" : "inconsistent";
}

namespace {

double half_disk_max(const PowerSeries& f, const SampleGrid& g) {
  // Maximum modulus: the max over |z| <= 1/2 sits on |z| = 1/2.
  double m = 0.0;
  for (double theta : g.angles()) m = std::max(m, std::abs(ps_eval(f, std::polar(0.5, theta)).value));
  return m;
}

bool same_series(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i)
    if (std::abs(a[i] - b[i]) > 1e-12) return false;
  return true;
}

TrendVerdict trend_verdict(const std::vector<std::pair<double, double>>& samples,
                           std::size_t monotone_from) {
  if (samples.empty()) return TrendVerdict::Inconsistent;
  const double first = samples.front().second;
  if (std::all_of(samples.begin(), samples.end(), [](const auto& s) { return s.second == 0.0; }))
    return TrendVerdict::CompactConsistent;
  const double slack = 1e-12 * first;
  for (std::size_t i = std::max<std::size_t>(monotone_from, 1); i < samples.size(); ++i) {
    if (samples[i].second > samples[i - 1].second + slack) return TrendVerdict::Inconsistent;
  }
  return samples.back().second < kDecayFactor * first ? TrendVerdict::CompactConsistent
                                                      : TrendVerdict::Inconsistent;
}

}  // namespace

NullFamily null_family(NullFamilyKind kind, int m_max, BlochParams p, const SampleGrid& g,
                       std::size_t order, const std::optional<PowerSeries>& base) {
  if (m_max < 1) throw ContractViolation("null_family: m_max must be >= 1");
  NullFamily fam;
  fam.kind = kind;
  const PowerSeries seed = base ? base->resized(std::max(base->order(), std::size_t{1}))
                                : PowerSeries::monomial(1, std::max(order, std::size_t{1}));
  if (kind == NullFamilyKind::Monomial && static_cast<std::size_t>(m_max) > order)
    throw ContractViolation("null_family: order must be >= m_max");
  if (seed[0] != Complex{}) throw DomainError("null_family: base must vanish at 0");

  for (int m = 1; m <= m_max; ++m) {
    PowerSeries raw = kind == NullFamilyKind::Monomial
                          ? PowerSeries::monomial(static_cast<std::size_t>(m), order)
                          : seed.dilated(1.0 - std::ldexp(1.0, -m));
    const double norm = seminorm_estimate(raw, p, g).value;
    if (!(norm > 0.0)) throw ContractViolation("null_family: member has zero seminorm");
    PowerSeries unit = Complex(1.0 / norm) * raw;
    fam.half_disk_sup.push_back(half_disk_max(unit, g));
    fam.raw_seminorms.push_back(norm);
    fam.members.push_back(std::move(unit));
  }

  bool decreasing = true;
  for (std::size_t i = 1; i < fam.half_disk_sup.size(); ++i)
    decreasing = decreasing && fam.half_disk_sup[i] <= fam.half_disk_sup[i - 1] * (1.0 + 1e-12);
  fam.null_verified = decreasing && fam.half_disk_sup.back() < kNullThreshold;

  fam.degenerate = fam.members.size() > 1 &&
                   std::all_of(fam.members.begin() + 1, fam.members.end(),
                               [&](const PowerSeries& f) { return same_series(f, fam.members[0]); });
  return fam;
}

TrendReport compactness_probe(const SymbolGBeta& s, BlochParams p, const NullFamily& fam,
                              const SampleGrid& g) {
  TrendReport rep;
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    const double v = seminorm_estimate(apply_generalized(fam.members[i], s), p, g).value;
    rep.samples.emplace_back(static_cast<double>(i + 1), v);
  }
  rep.verdict = trend_verdict(rep.samples, rep.samples.size() / 2);
  return rep;
}

TrendReport essential_norm_probe(const SymbolGBeta& s, BlochParams p,
                                 std::span<const double> dilations,
                                 std::span<const PowerSeries> test_family, const SampleGrid& g) {
  if (dilations.empty() || test_family.empty())
    throw ContractViolation("essential_norm_probe: dilations and family must be non-empty");
  for (std::size_t i = 0; i < dilations.size(); ++i) {
    if (!(dilations[i] > 0.0 && dilations[i] < 1.0))
      throw DomainError("essential_norm_probe: dilations must lie in (0, 1)");
    if (i > 0 && !(dilations[i] > dilations[i - 1]))
      throw ContractViolation("essential_norm_probe: dilations must be increasing");
  }
  std::vector<PowerSeries> images;
  images.reserve(test_family.size());
  for (const auto& f : test_family) {
    if (seminorm_estimate(f, p, g).value > 1.0 + 1e-9)
      throw ContractViolation("essential_norm_probe: family members must have seminorm <= 1");
    images.push_back(apply_generalized(f, s));
  }

  TrendReport rep;
  for (double dil : dilations) {
    double best = 0.0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < test_family.size(); ++i) {
      const PowerSeries diff = images[i] - compact_approximant(test_family[i], s, dil);
      const double v = seminorm_estimate(diff, p, g).value;
      if (v > best) {
        best = v;
        arg = i;
      }
    }
    rep.samples.emplace_back(dil, best);
    rep.argmax_member.push_back(arg);
  }
  rep.verdict = trend_verdict(rep.samples, 0);
  return rep;
}

std::vector<PowerSeries> default_test_family(BlochParams p, const SampleGrid& g,
                                             std::size_t order) {
  constexpr std::size_t kMaxDegree = 32;
  if (order < kMaxDegree) throw ContractViolation("default_test_family: order must be >= 32");
  std::vector<PowerSeries> fam;
  for (std::size_t m = 1; m <= kMaxDegree; ++m) {
    const PowerSeries zm = PowerSeries::monomial(m, order);
    fam.push_back(Complex(1.0 / seminorm_estimate(zm, p, g).value) * zm);
  }
  std::vector<Complex> log_coeffs(order + 1, Complex{});
  for (std::size_t n = 1; n <= order; ++n) log_coeffs[n] = 1.0 / static_cast<double>(n);
  const PowerSeries log_series(std::move(log_coeffs));
  fam.push_back(Complex(1.0 / seminorm_estimate(log_series, p, g).value) * log_series);
  return fam;
}

}  // namespace bcl
