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

// Exercises the shared library strictly through its C interface.

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "bcl/bcl.h"
#include "doctest.h"
#include "json.hpp"

namespace {

std::string take(char* s) {
  std::string out(s);
  bcl_string_free(s);
  return out;
}

bcl_series* series(std::vector<double> re) {
  bcl_series* f = nullptr;
  REQUIRE(bcl_series_create(re.data(), nullptr, re.size(), &f) == BCL_OK);
  return f;
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(bcl_version()).size() > 0);
  CHECK(std::string(bcl_status_name(BCL_OK)) == "ok");
  CHECK(std::string(bcl_status_name(BCL_ERR_DOMAIN)) == "domain error");
  CHECK(bcl_default_order() == 256);
}

TEST_CASE("series round trip through handles") {
  const double re[] = {0.0, 1.0, 2.0};
  const double im[] = {0.0, -1.0, 0.5};
  bcl_series* f = nullptr;
  REQUIRE(bcl_series_create(re, im, 3, &f) == BCL_OK);
  size_t order = 0;
  CHECK(bcl_series_order(f, &order) == BCL_OK);
  CHECK(order == 2);
  double cr = 0.0;
  double ci = 0.0;
  CHECK(bcl_series_coeff(f, 1, &cr, &ci) == BCL_OK);
  CHECK(cr == 1.0);
  CHECK(ci == -1.0);
  CHECK(bcl_series_coeff(f, 3, &cr, &ci) == BCL_ERR_CONTRACT);

  char* json = nullptr;
  REQUIRE(bcl_series_to_json(f, &json) == BCL_OK);
  const std::string text = take(json);
  CHECK(text == R"({"coeffs":[[0.0,0.0],[1.0,-1.0],[2.0,0.5]]})");
  bcl_series* g = nullptr;
  REQUIRE(bcl_series_from_json(text.c_str(), &g) == BCL_OK);
  CHECK(bcl_series_coeff(g, 2, &cr, &ci) == BCL_OK);
  CHECK(cr == 2.0);
  CHECK(ci == 0.5);
  bcl_series_free(g);
  bcl_series_free(f);
}

TEST_CASE("errors map to status codes") {
  bcl_series* out = nullptr;
  bcl_series* one = series({1.0, 1.0});
  CHECK(bcl_series_div_by_z(one, &out) == BCL_ERR_DOMAIN);
  CHECK(out == nullptr);
  CHECK(std::string(bcl_last_error()).find("f(0)") != std::string::npos);
  CHECK(bcl_series_exp(one, &out) == BCL_ERR_CONTRACT);
  CHECK(bcl_series_from_json("[1,", &out) == BCL_ERR_FORMAT);
  CHECK(bcl_series_from_json(nullptr, &out) == BCL_ERR_NULL_ARGUMENT);
  CHECK(bcl_series_mul(one, nullptr, &out) == BCL_ERR_NULL_ARGUMENT);
  CHECK(bcl_series_mul(one, one, nullptr) == BCL_ERR_NULL_ARGUMENT);
  CHECK(bcl_series_create(nullptr, nullptr, 2, &out) == BCL_ERR_NULL_ARGUMENT);
  double re = 0.0;
  double im = 0.0;
  CHECK(bcl_series_eval(one, 1.0, 0.0, &re, &im, nullptr) == BCL_ERR_DOMAIN);
  CHECK(bcl_series_eval(one, 0.5, 0.0, &re, &im, nullptr) == BCL_OK);
  CHECK(re == 1.5);
  CHECK(std::string(bcl_last_error()).empty());

  bcl_symbol* s = nullptr;
  REQUIRE(bcl_symbol_from_json(R"({"terms":[{"a":1,"b_angle":0}],"beta":1,"h":[-1]})", &s) == BCL_OK);
  CHECK(bcl_eigenfunction_psi(s, 1, 8, &out) == BCL_ERR_SPECTRUM_EMPTY);
  bcl_symbol_free(s);
  bcl_series_free(one);

  // Freeing null handles is a no-op.
  bcl_series_free(nullptr);
  bcl_symbol_free(nullptr);
  bcl_grid_free(nullptr);
  bcl_matrix_free(nullptr);
  bcl_string_free(nullptr);
}

TEST_CASE("error messages are per thread") {
  bcl_series* one = series({1.0, 1.0});
  bcl_series* out = nullptr;
  CHECK(bcl_series_div_by_z(one, &out) == BCL_ERR_DOMAIN);
  std::string other;
  std::thread t([&] { other = bcl_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(bcl_last_error()).empty());
  bcl_series_free(one);
}

TEST_CASE("series arithmetic") {
  bcl_series* a = series({1, 1, 1});
  bcl_series* b = series({1, -1, 0});
  bcl_series* p = nullptr;
  REQUIRE(bcl_series_mul(a, b, &p) == BCL_OK);
  double re = 0.0;
  double im = 0.0;
  for (size_t n = 0; n < 3; ++n) {
    bcl_series_coeff(p, n, &re, &im);
    CHECK(re == (n == 0 ? 1.0 : 0.0));
  }
  bcl_series* integ = nullptr;
  REQUIRE(bcl_series_integrate(a, &integ) == BCL_OK);
  bcl_series_coeff(integ, 3, &re, &im);
  CHECK(re == doctest::Approx(1.0 / 3.0));
  bcl_series* d = nullptr;
  REQUIRE(bcl_series_derivative(integ, &d) == BCL_OK);
  bcl_series_coeff(d, 2, &re, &im);
  CHECK(re == doctest::Approx(1.0));
  bcl_series* bin = nullptr;
  REQUIRE(bcl_binomial_series(2.0, 1.0, 0.0, 3, &bin) == BCL_OK);
  bcl_series_coeff(bin, 3, &re, &im);
  CHECK(re == 4.0);
  CHECK(bcl_pochhammer(0.5, 0.0, 3, &re, &im) == BCL_OK);
  CHECK(re == doctest::Approx(1.875));
  CHECK(bcl_pochhammer(0.5, 0.0, -1, &re, &im) == BCL_ERR_CONTRACT);
  bcl_series* csv_src = series({0.5, 2});
  char* csv = nullptr;
  REQUIRE(bcl_series_to_csv(csv_src, &csv) == BCL_OK);
  CHECK(take(csv).find("0.5") != std::string::npos);
  for (auto* f : {a, b, p, integ, d, bin, csv_src}) bcl_series_free(f);
}

TEST_CASE("norms and growth") {
  bcl_grid* g = nullptr;
  REQUIRE(bcl_grid_create_default(64, 128, 0.999, &g) == BCL_OK);
  size_t nr = 0;
  size_t na = 0;
  CHECK(bcl_grid_shape(g, &nr, &na) == BCL_OK);
  CHECK(nr == 65);
  CHECK(na == 128);
  bcl_grid* bad = nullptr;
  CHECK(bcl_grid_create_default(4, 8, 1.0, &bad) == BCL_ERR_DOMAIN);

  bcl_series* z = series({0, 1});
  bcl_series* zp = nullptr;
  REQUIRE(bcl_series_resize(z, 256, &zp) == BCL_OK);
  bcl_seminorm_result r{};
  REQUIRE(bcl_seminorm_estimate(zp, 1.0, g, &r) == BCL_OK);
  CHECK(r.value == doctest::Approx(1.0));
  CHECK(r.excluded_points == 0);
  double norm = 0.0;
  CHECK(bcl_bloch_norm(zp, 1.0, g, &norm) == BCL_OK);
  CHECK(norm == doctest::Approx(1.0));
  CHECK(bcl_bloch_norm(zp, 0.0, g, &norm) == BCL_ERR_CONTRACT);
  double bound = 0.0;
  CHECK(bcl_growth_bound(2.0, 0.5, 1.0, 0.0, &bound) == BCL_OK);
  CHECK(bound == doctest::Approx(1.0));
  bcl_growth_result gr{};
  REQUIRE(bcl_growth_check(zp, 1.0, g, &gr) == BCL_OK);
  CHECK(gr.passed == 1);
  char* csv = nullptr;
  REQUIRE(bcl_seminorm_records_csv(zp, 1.0, g, &csv) == BCL_OK);
  const std::string text = take(csv);
  CHECK(std::count(text.begin(), text.end(), '\n') == 65 * 128 + 1);
  bcl_series_free(z);
  bcl_series_free(zp);
  bcl_grid_free(g);
}

TEST_CASE("symbols, matrices and spectra") {
  const double a_re[] = {1.0};
  const double angle[] = {0.0};
  bcl_series* h = series({-2.0});
  bcl_symbol* s = nullptr;
  REQUIRE(bcl_symbol_create(1.0, a_re, nullptr, angle, 1, h, &s) == BCL_OK);
  double gr = 0.0;
  double gi = 0.0;
  CHECK(bcl_symbol_g0(s, &gr, &gi) == BCL_OK);
  CHECK(gr == -1.0);
  double beta = 0.0;
  CHECK(bcl_symbol_beta(s, &beta) == BCL_OK);
  CHECK(beta == 1.0);

  bcl_matrix* m = nullptr;
  REQUIRE(bcl_operator_matrix(s, 6, &m) == BCL_OK);
  size_t size = 0;
  CHECK(bcl_matrix_size(m, &size) == BCL_OK);
  CHECK(size == 6);
  std::vector<double> re(6);
  std::vector<double> im(6);
  REQUIRE(bcl_truncated_spectrum(m, re.data(), im.data(), 6) == BCL_OK);
  for (int n = 1; n <= 6; ++n) CHECK(re[n - 1] == doctest::Approx(-1.0 / n));
  CHECK(bcl_truncated_spectrum(m, re.data(), im.data(), 5) == BCL_ERR_CONTRACT);
  double er = 0.0;
  double ei = 0.0;
  CHECK(bcl_matrix_entry(m, 1, 2, &er, &ei) == BCL_OK);
  CHECK(er == 0.0);
  CHECK(bcl_matrix_entry(m, 0, 1, &er, &ei) != BCL_OK);

  char* json = nullptr;
  REQUIRE(bcl_point_spectrum_json(s, 2.0, 3, &json) == BCL_OK);
  const auto ps = nlohmann::json::parse(take(json));
  CHECK(ps["admissibility"] == "PASS");
  CHECK(ps["predicted"].size() == 3);

  bcl_series* v = nullptr;
  REQUIRE(bcl_eigenvector(s, 2, 32, &v) == BCL_OK);
  bcl_series* cv = nullptr;
  REQUIRE(bcl_apply_generalized(v, s, &cv) == BCL_OK);
  for (size_t n = 0; n <= 32; ++n) {
    double vr = 0.0, vi = 0.0, cr = 0.0, ci = 0.0;
    bcl_series_coeff(v, n, &vr, &vi);
    bcl_series_coeff(cv, n, &cr, &ci);
    CHECK(std::abs(cr - (-0.5) * vr) <= 1e-12);
  }
  bcl_series* mv = nullptr;
  bcl_series* v6 = nullptr;
  REQUIRE(bcl_series_resize(v, 6, &v6) == BCL_OK);
  REQUIRE(bcl_matrix_apply(m, v6, &mv) == BCL_OK);
  char* mcsv = nullptr;
  REQUIRE(bcl_matrix_to_csv(m, &mcsv) == BCL_OK);
  CHECK(take(mcsv).rfind("re_1,im_1", 0) == 0);

  char* sj = nullptr;
  REQUIRE(bcl_symbol_to_json(s, &sj) == BCL_OK);
  bcl_symbol* s2 = nullptr;
  CHECK(bcl_symbol_from_json(take(sj).c_str(), &s2) == BCL_OK);
  CHECK(bcl_symbol_from_json(R"({"terms":[{"a":0,"b_angle":0}],"beta":1})", &s2) == BCL_ERR_FORMAT);
  const double bad_angles[] = {0.0, 0.0};
  const double two[] = {1.0, 1.0};
  bcl_symbol* dup = nullptr;
  CHECK(bcl_symbol_create(1.0, two, nullptr, bad_angles, 2, nullptr, &dup) == BCL_ERR_CONTRACT);

  for (auto* f : {h, v, cv, mv, v6}) bcl_series_free(f);
  bcl_symbol_free(s2);
  bcl_matrix_free(m);
  bcl_symbol_free(s);
}

TEST_CASE("operators") {
  bcl_series* z = series({0, 1, 0, 0});
  bcl_series* out = nullptr;
  REQUIRE(bcl_apply_beta_cesaro(z, 1.0, &out) == BCL_OK);
  double re = 0.0;
  double im = 0.0;
  bcl_series_coeff(out, 3, &re, &im);
  CHECK(re == doctest::Approx(1.0 / 3.0));
  bcl_series_free(out);

  bcl_symbol* c = nullptr;
  REQUIRE(bcl_symbol_beta_cesaro(1.0, &c) == BCL_OK);
  REQUIRE(bcl_compact_approximant(z, c, 0.5, &out) == BCL_OK);
  bcl_series_coeff(out, 3, &re, &im);
  CHECK(re == doctest::Approx(1.0 / 6.0));
  bcl_series_free(out);
  CHECK(bcl_compact_approximant(z, c, 1.0, &out) == BCL_ERR_DOMAIN);

  REQUIRE(bcl_preimage_under_cesaro(z, &out) == BCL_OK);
  bcl_series_coeff(out, 2, &re, &im);
  CHECK(re == -1.0);
  bcl_series_free(out);

  bcl_symbol* alex = nullptr;
  REQUIRE(bcl_symbol_beta_cesaro(0.0, &alex) == BCL_OK);
  bcl_grid* g = nullptr;
  REQUIRE(bcl_grid_create_default(64, 128, 0.999, &g) == BCL_OK);
  double probe = 0.0;
  REQUIRE(bcl_approximate_eigen_probe(alex, 4, 1.0, g, 256, &probe) == BCL_OK);
  CHECK(std::abs(probe - 0.25) <= 1e-3);
  bcl_grid_free(g);
  bcl_symbol_free(alex);
  bcl_symbol_free(c);
  bcl_series_free(z);
}

TEST_CASE("certificates") {
  unsigned flags = 0;
  char* json = nullptr;
  REQUIRE(bcl_classify(2.0, 1.0, &flags, &json) == BCL_OK);
  CHECK(flags == (BCL_VERDICT_BOUNDED | BCL_VERDICT_ESSENTIAL_NORM_ZERO));
  const auto c = nlohmann::json::parse(take(json));
  CHECK(c["verdict"] == "Bounded+EssentialNormZero");
  CHECK(c["source"] == "Thm 2.3 / Thm 4.5");
  REQUIRE(bcl_classify(0.5, 0.7, &flags, nullptr) == BCL_OK);
  CHECK(flags == BCL_VERDICT_UNBOUNDED);

  double v = 0.0;
  int boundary = 0;
  REQUIRE(bcl_bound_constant(0.5, 0.5, &v, &boundary) == BCL_OK);
  CHECK(v == doctest::Approx(2.0 * std::numbers::sqrt2));
  CHECK(boundary == 1);
  CHECK(bcl_bound_constant(0.5, 0.7, &v, &boundary) == BCL_ERR_DOMAIN);

  REQUIRE(bcl_counterexample_probe_json(0.5, 1.0, BCL_EX26, nullptr, 0, &json) == BCL_OK);
  const auto p = nlohmann::json::parse(take(json));
  CHECK(std::abs(p["fitted_exponent"].get<double>() - 0.5) <= 0.05);
  CHECK(p["verdict"] == "diverges");
  CHECK(bcl_counterexample_probe_json(1.0, 0.5, BCL_EX26, nullptr, 0, &json) == BCL_ERR_DOMAIN);
  CHECK(bcl_counterexample_probe_json(1.0, 2.0, static_cast<bcl_counterexample>(7), nullptr, 0, &json) ==
        BCL_ERR_CONTRACT);

  REQUIRE(bcl_one_minus_power_bound(1, &v) == BCL_OK);
  CHECK(std::abs(v - (1.0 + 2.0 * std::numbers::sqrt2)) <= 1e-12);
}

TEST_CASE("compactness probes") {
  bcl_symbol* alex = nullptr;
  REQUIRE(bcl_symbol_beta_cesaro(0.0, &alex) == BCL_OK);
  bcl_grid* g = nullptr;
  REQUIRE(bcl_grid_create_default(32, 64, 0.999, &g) == BCL_OK);
  char* json = nullptr;
  REQUIRE(bcl_compactness_probe_json(alex, 1.0, BCL_FAMILY_MONOMIAL, 16, g, 256, &json) == BCL_OK);
  const auto c = nlohmann::json::parse(take(json));
  CHECK(c["verdict"] == "compact-consistent");
  CHECK(c["samples"].size() == 16);
  CHECK(c["family"]["kind"] == "monomial");

  const double dil[] = {0.5, 0.9, 0.99, 0.999};
  REQUIRE(bcl_essential_norm_probe_json(alex, 1.0, dil, 4, g, 256, &json) == BCL_OK);
  const auto e = nlohmann::json::parse(take(json));
  CHECK(e["verdict"] == "compact-consistent");
  CHECK(e["samples"].size() == 4);
  const double bad[] = {0.5, 1.5};
  CHECK(bcl_essential_norm_probe_json(alex, 1.0, bad, 2, g, 256, &json) == BCL_ERR_DOMAIN);
  bcl_grid_free(g);
  bcl_symbol_free(alex);
}
