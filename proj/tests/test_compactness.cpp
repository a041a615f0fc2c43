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

#include <cmath>

#include "bcl/bounds.hpp"
#include "bcl/compactness.hpp"
#include "bcl/io.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace bcl;

namespace {

const std::vector<double> kDilations{0.5, 0.9, 0.99, 0.999};

SymbolGBeta alexander() { return SymbolGBeta::beta_cesaro(0.0); }

}  // namespace

TEST_CASE("monomial null family") {
  const auto g = default_grid();
  const auto fam = null_family(NullFamilyKind::Monomial, 16, BlochParams(1.0), g);
  REQUIRE(fam.members.size() == 16);
  CHECK(fam.members[0] == PowerSeries::monomial(1, kDefaultOrder));
  CHECK(fam.raw_seminorms[0] == doctest::Approx(1.0));
  for (std::size_t m = 1; m <= 16; ++m) {
    CHECK(seminorm_estimate(fam.members[m - 1], BlochParams(1.0), g).value == doctest::Approx(1.0));
    CHECK(fam.members[m - 1][0] == Complex{});
    // |z|^m <= 2^-m on the half disk, scaled by the normalization.
    CHECK(fam.half_disk_sup[m - 1] <= std::ldexp(1.0, -int(m)) / fam.raw_seminorms[m - 1] * (1 + 1e-12));
  }
  CHECK(fam.null_verified);
  CHECK_FALSE(fam.degenerate);

  const auto short_fam = null_family(NullFamilyKind::Monomial, 3, BlochParams(1.0), g);
  CHECK_FALSE(short_fam.null_verified);
  CHECK_THROWS(null_family(NullFamilyKind::Monomial, 0, BlochParams(1.0), g));
  CHECK_THROWS(null_family(NullFamilyKind::Monomial, 40, BlochParams(1.0), g, 32));
}

TEST_CASE("dilation family") {
  const auto g = default_grid(32, 64, 0.999);
  const auto lin = null_family(NullFamilyKind::Dilation, 8, BlochParams(1.0), g);
  CHECK(lin.degenerate);
  CHECK_FALSE(lin.null_verified);

  std::vector<Complex> c(kDefaultOrder + 1, Complex{});
  for (std::size_t n = 1; n <= kDefaultOrder; ++n) c[n] = 1.0 / double(n);
  const auto lg = null_family(NullFamilyKind::Dilation, 8, BlochParams(1.0), g, kDefaultOrder,
                              PowerSeries(c));
  CHECK_FALSE(lg.degenerate);
  for (const auto& f : lg.members)
    CHECK(seminorm_estimate(f, BlochParams(1.0), g).value == doctest::Approx(1.0));
  CHECK_THROWS_AS(null_family(NullFamilyKind::Dilation, 4, BlochParams(1.0), g, kDefaultOrder,
                              PowerSeries::constant(1.0, 4)),
                  DomainError);
  CHECK(parse_null_family_kind("dilation") == NullFamilyKind::Dilation);
  CHECK_FALSE(parse_null_family_kind("other").has_value());
}

TEST_CASE("compactness probe on the Alexander operator") {
  const auto g = default_grid();
  const BlochParams p(1.0);
  const auto fam = null_family(NullFamilyKind::Monomial, 64, p, g);
  const auto rep = compactness_probe(alexander(), p, fam, g);
  REQUIRE(rep.samples.size() == 64);
  for (const auto& [m, v] : rep.samples) CHECK(std::abs(v - 1.0 / m) <= 1e-3);
  CHECK(rep.verdict == TrendVerdict::CompactConsistent);
}

TEST_CASE("compactness probe on an unbounded regime") {
  const auto g = default_grid();
  const BlochParams p(0.5);
  const auto fam = null_family(NullFamilyKind::Monomial, 16, p, g, 512);
  const auto rep = compactness_probe(SymbolGBeta::beta_cesaro(1.0), p, fam, g);
  CHECK(rep.verdict == TrendVerdict::Inconsistent);
}

TEST_CASE("zero operator gives zeros") {
  const auto g = default_grid(16, 32, 0.999);
  const BlochParams p(1.0);
  const SymbolGBeta zero({}, 0.0, PowerSeries(0));
  const auto fam = null_family(NullFamilyKind::Monomial, 8, p, g);
  const auto rep = compactness_probe(zero, p, fam, g);
  for (const auto& s : rep.samples) CHECK(s.second == 0.0);
  CHECK(rep.verdict == TrendVerdict::CompactConsistent);
}

TEST_CASE("compact regimes decay eventually along monomials") {
  const auto g = default_grid(32, 64, 0.999);
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double beta : {0.0, alpha / 2}) {
      CAPTURE(alpha);
      CAPTURE(beta);
      const BlochParams p(alpha);
      REQUIRE((classify(alpha, beta).has(Verdict::Compact) ||
               classify(alpha, beta).has(Verdict::EssentialNormZero)));
      const auto fam = null_family(NullFamilyKind::Monomial, 32, p, g);
      const auto rep = compactness_probe(SymbolGBeta::beta_cesaro(beta), p, fam, g);
      for (std::size_t i = rep.samples.size() / 2 + 1; i < rep.samples.size(); ++i)
        CHECK(rep.samples[i].second <= rep.samples[i - 1].second);
    }
  }
}

TEST_CASE("essential norm probe") {
  const auto g = default_grid();
  const BlochParams p(1.0);
  const auto fam = default_test_family(p, g, 512);
  REQUIRE(fam.size() == 33);
  const auto rep = essential_norm_probe(alexander(), p, kDilations, fam, g);
  REQUIRE(rep.samples.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(rep.samples[i].first == kDilations[i]);
    CHECK(rep.samples[i].second >= 0.0);
    if (i > 0) CHECK(rep.samples[i].second < rep.samples[i - 1].second);
  }
  CHECK(rep.verdict == TrendVerdict::CompactConsistent);

  CHECK_THROWS_AS(essential_norm_probe(alexander(), p, std::vector<double>{0.5, 1.0}, fam, g), DomainError);
  CHECK_THROWS(essential_norm_probe(alexander(), p, std::vector<double>{0.9, 0.5}, fam, g));
  CHECK_THROWS(essential_norm_probe(alexander(), p, std::vector<double>{}, fam, g));
  const std::vector<PowerSeries> too_big{Complex(3.0) * PowerSeries::monomial(1, 64)};
  CHECK_THROWS(essential_norm_probe(alexander(), p, kDilations, too_big, g));
}

TEST_CASE("essential norm probe is monotone in the dilation") {
  const auto g = default_grid(32, 64, 0.999);
  auto rng = testing::rng(3001);
  std::vector<double> dil;
  for (double s = 0.1; s < 0.999; s += 0.07) dil.push_back(s);
  for (double alpha : {1.0, 2.0}) {
    const BlochParams p(alpha);
    const auto fam = default_test_family(p, g, 256);
    for (int trial = 0; trial < 3; ++trial) {
      const double beta = testing::uniform(rng, 0.0, 1.0);
      const auto rep = essential_norm_probe(SymbolGBeta::beta_cesaro(beta), p, dil, fam, g);
      for (std::size_t i = 1; i < rep.samples.size(); ++i)
        CHECK(rep.samples[i].second <= rep.samples[i - 1].second + 1e-6);
    }
  }
}

TEST_CASE("essential norm probe respects the triangle sanity bound") {
  const auto g = default_grid(32, 64, 0.999);
  for (auto [alpha, beta] : {std::pair{1.0, 0.5}, std::pair{2.0, 1.0}, std::pair{0.5, 0.25}}) {
    const BlochParams p(alpha);
    const auto fam = default_test_family(p, g, 256);
    const auto s = SymbolGBeta::beta_cesaro(beta);
    const double k = bound_constant(alpha, beta).value;
    const auto rep = essential_norm_probe(s, p, kDilations, fam, g);
    for (const auto& [dil, v] : rep.samples) {
      double ks = 0.0;
      for (const auto& f : fam) ks = std::max(ks, seminorm_estimate(compact_approximant(f, s, dil), p, g).value);
      CHECK(v <= k + ks + 1e-9);
    }
  }
}

TEST_CASE("trend json") {
  const auto g = default_grid(16, 32, 0.999);
  const BlochParams p(1.0);
  const auto fam = default_test_family(p, g, 256);
  const auto rep = essential_norm_probe(alexander(), p, kDilations, fam, g);
  const auto j = io::trend_to_json(rep, true);
  REQUIRE(j["samples"].size() == 4);
  CHECK(j["samples"][0].contains("dilation"));
  CHECK(j["samples"][0].contains("max_distance"));
  CHECK(j["samples"][0].contains("argmax_member"));
  CHECK(j["verdict"] == "compact-consistent");
}
