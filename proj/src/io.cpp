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

#include "bcl/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bcl::io {
namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json samples_json(const std::vector<std::pair<double, double>>& s) {
  Json arr = Json::array();
  for (const auto& [t, v] : s) arr.push_back({t, v});
  return arr;
}

}  // namespace

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw FormatError("expected a number or [re, im], got " + j.dump());
}

Json to_json(const PowerSeries& f) {
  Json arr = Json::array();
  for (const auto& c : f.coeffs()) arr.push_back(complex_to_json(c));
  return Json{{"coeffs", std::move(arr)}};
}

PowerSeries series_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("coeffs")) throw FormatError("series object needs a \"coeffs\" field");
    arr = &j.at("coeffs");
  }
  if (!arr->is_array() || arr->empty()) throw FormatError("series coefficients must be a non-empty array");
  std::vector<Complex> c;
  c.reserve(arr->size());
  for (const auto& e : *arr) c.push_back(complex_from_json(e));
  try {
    return PowerSeries(std::move(c));
  } catch (const ContractViolation& e) {
    throw FormatError(e.what());
  }
}

PowerSeries parse_series(std::string_view text) {
  try {
    return series_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed series JSON: ") + e.what());
  }
}

Json to_json(const SymbolGBeta& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms())
    terms.push_back({{"a", complex_to_json(t.a)}, {"b_angle", std::arg(t.b)}});
  return Json{{"terms", std::move(terms)}, {"beta", s.beta()}, {"h", to_json(s.h())}};
}

SymbolGBeta symbol_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw FormatError("symbol must be a JSON object");
    if (!j.contains("beta") || !j.at("beta").is_number())
      throw FormatError("symbol needs a numeric \"beta\"");
    std::vector<std::pair<Complex, double>> terms;
    if (j.contains("terms")) {
      if (!j.at("terms").is_array()) throw FormatError("\"terms\" must be an array");
      for (const auto& t : j.at("terms")) {
        if (!t.is_object() || !t.contains("a") || !t.contains("b_angle") ||
            !t.at("b_angle").is_number())
          throw FormatError("each term needs \"a\" and numeric \"b_angle\"");
        terms.emplace_back(complex_from_json(t.at("a")), t.at("b_angle").get<double>());
      }
    }
    PowerSeries h = j.contains("h") ? series_from_json(j.at("h")) : PowerSeries(0);
    return SymbolGBeta::from_angles(terms, j.at("beta").get<double>(), std::move(h));
  } catch (const ContractViolation& e) {
    throw FormatError(std::string("invalid symbol: ") + e.what());
  }
}

SymbolGBeta parse_symbol(std::string_view text) {
  try {
    return symbol_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed symbol JSON: ") + e.what());
  }
}

Json to_json(const SeminormEstimate& e) {
  return Json{{"value", e.value},
              {"argmax", complex_to_json(e.argmax)},
              {"max_tail", e.max_tail},
              {"excluded_points", e.excluded_points}};
}

Json to_json(const GrowthVerdict& v) {
  return Json{{"verdict", v.passed ? "PASS" : "FAIL"},
              {"worst_margin", v.worst_margin},
              {"worst_point", complex_to_json(v.worst_point)},
              {"checked_points", v.checked_points},
              {"excluded_points", v.excluded_points}};
}

Json to_json(const SpectrumReport& r, std::size_t count) {
  Json eig = Json::array();
  for (const auto& l : r.eigenvalues(count)) eig.push_back(complex_to_json(l));
  Json terms = Json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"index", t.index}, {"re_ratio", t.re_ratio}, {"admissible", t.admissible}});
  return Json{{"g0", complex_to_json(r.g0)},
              {"admissibility", to_string(r.status)},
              {"predicted", std::move(eig)},
              {"terms", std::move(terms)},
              {"source", r.source},
              {"note", r.note}};
}

Json to_json(const Classification& c) {
  return Json{{"verdict", c.label()}, {"source", c.source()}};
}

Json to_json(const BoundConstant& b) {
  return Json{{"value", b.value},
              {"argmax_t", b.argmax_t},
              {"attained_at_boundary", b.attained_at_boundary}};
}

Json to_json(const ProbeReport& r) {
  Json j{{"samples", samples_json(r.samples)},
         {"fitted_exponent", r.fitted_exponent},
         {"verdict", to_string(r.verdict)}};
  if (r.log_exponent) j["log_exponent"] = *r.log_exponent;
  return j;
}

Json to_json(const NullFamily& f) {
  return Json{{"kind", to_string(f.kind)},
              {"size", f.members.size()},
              {"raw_seminorms", f.raw_seminorms},
              {"half_disk_sup", f.half_disk_sup},
              {"null_verified", f.null_verified},
              {"degenerate", f.degenerate}};
}

Json trend_to_json(const TrendReport& r, bool essential_norm) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.samples.size(); ++i) {
    if (essential_norm) {
      rows.push_back({{"dilation", r.samples[i].first},
                      {"max_distance", r.samples[i].second},
                      {"argmax_member", i < r.argmax_member.size() ? r.argmax_member[i] : 0}});
    } else {
      rows.push_back({{"m", r.samples[i].first}, {"norm", r.samples[i].second}});
    }
  }
  return Json{{"samples", std::move(rows)}, {"verdict", to_string(r.verdict)}};
}

std::string records_to_csv(const std::vector<GridRecord>& records) {
  std::ostringstream os;
  os << "r,theta,weight,abs_fprime,product,tail,excluded\n";
  for (const auto& r : records) {
    os << num(r.r) << ',' << num(r.theta) << ',' << num(r.weight) << ',' << num(r.abs_derivative)
       << ',' << num(r.product) << ',' << num(r.tail) << ',' << (r.excluded ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string matrix_to_csv(const OperatorMatrix& m) {
  // Dense, row-major; each entry spans two columns (re, im).
  std::ostringstream os;
  for (std::size_t n = 1; n <= m.size(); ++n) {
    if (n > 1) os << ',';
    os << "re_" << n << ",im_" << n;
  }
  os << '\n';
  for (std::size_t row = 1; row <= m.size(); ++row) {
    for (std::size_t col = 1; col <= m.size(); ++col) {
      const Complex e = m.entry(row, col);
      if (col > 1) os << ',';
      os << num(e.real()) << ',' << num(e.imag());
    }
    os << '\n';
  }
  return os.str();
}

std::string samples_to_csv(const std::vector<std::pair<double, double>>& samples,
                           std::string_view x_name, std::string_view y_name) {
  std::ostringstream os;
  os << x_name << ',' << y_name << '\n';
  for (const auto& [x, y] : samples) os << num(x) << ',' << num(y) << '\n';
  return os.str();
}

std::string series_to_csv(const PowerSeries& f) {
  std::ostringstream os;
  os << "n,re,im\n";
  for (std::size_t n = 0; n <= f.order(); ++n)
    os << n << ',' << num(f[n].real()) << ',' << num(f[n].imag()) << '\n';
  return os.str();
}

}  // namespace bcl::io
