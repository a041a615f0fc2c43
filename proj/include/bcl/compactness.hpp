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
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "bcl/bloch.hpp"
#include "bcl/cesaro.hpp"
#include "bcl/series.hpp"

namespace bcl {

enum class NullFamilyKind { Monomial, Dilation };

const char* to_string(NullFamilyKind k);
std::optional<NullFamilyKind> parse_null_family_kind(std::string_view name);

/// Bounded sequence f_1..f_M in the little space, meant to tend to 0
/// uniformly on compact subsets.
struct NullFamily {
  NullFamilyKind kind = NullFamilyKind::Monomial;
  std::vector<PowerSeries> members;      // members[m-1] = f_m, unit estimated seminorm
  std::vector<double> raw_seminorms;     // seminorm before normalization
  std::vector<double> half_disk_sup;     // max over |z| <= 1/2 of |f_m|
  bool null_verified = false;            // half_disk_sup non-increasing, last < 1e-3
  bool degenerate = false;               // all normalized members coincide
};

inline constexpr double kNullThreshold = 1e-3;

/// Monomial kind: f_m = z^m / ||z^m||. Dilation kind: f_m(z) = base(r_m z)
/// renormalized, r_m = 1 - 2^{-m} (base defaults to z).
NullFamily null_family(NullFamilyKind kind, int m_max, BlochParams p, const SampleGrid& g,
                       std::size_t order = kDefaultOrder,
                       const std::optional<PowerSeries>& base = std::nullopt);

enum class TrendVerdict { CompactConsistent, Inconsistent };

const char* to_string(TrendVerdict v);

struct TrendReport {
  std::vector<std::pair<double, double>> samples;  // (m or dilation, estimated norm)
  std::vector<std::size_t> argmax_member;          // essential-norm probe only
  TrendVerdict verdict = TrendVerdict::Inconsistent;
};

/// Decay factor a trend must reach: final value below 0.1 x initial.
inline constexpr double kDecayFactor = 0.1;

/// ||C_g f_m|| over the family. Compact-consistent when the second half of
/// the sequence is non-increasing and the final value is below 0.1 x the
/// first (an all-zero sequence also counts).
TrendReport compactness_probe(const SymbolGBeta& s, BlochParams p, const NullFamily& fam,
                              const SampleGrid& g);

/// For each dilation s: max over the family of ||(C_g - K_s) f||, a lower
/// bound for the operator distance. Consistent with essential norm zero when
/// the whole sequence is non-increasing and ends below 0.1 x its start.
TrendReport essential_norm_probe(const SymbolGBeta& s, BlochParams p,
                                 std::span<const double> dilations,
                                 std::span<const PowerSeries> test_family, const SampleGrid& g);

/// z^m / ||z^m|| for m = 1..32 followed by -Log(1 - z) / ||-Log(1 - z)||.
std::vector<PowerSeries> default_test_family(BlochParams p, const SampleGrid& g,
                                             std::size_t order = kDefaultOrder);

}  // namespace bcl
