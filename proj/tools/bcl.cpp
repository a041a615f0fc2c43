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

// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bcl/bcl.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerdict = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(bcl_status s) {
  if (s != BCL_OK) throw UsageError(std::string(bcl_status_name(s)) + ": " + bcl_last_error());
}

struct SeriesDeleter {
  void operator()(bcl_series* p) const { bcl_series_free(p); }
};
struct GridDeleter {
  void operator()(bcl_grid* p) const { bcl_grid_free(p); }
};
struct SymbolDeleter {
  void operator()(bcl_symbol* p) const { bcl_symbol_free(p); }
};
struct MatrixDeleter {
  void operator()(bcl_matrix* p) const { bcl_matrix_free(p); }
};
using Series = std::unique_ptr<bcl_series, SeriesDeleter>;
using Grid = std::unique_ptr<bcl_grid, GridDeleter>;
using Symbol = std::unique_ptr<bcl_symbol, SymbolDeleter>;
using Matrix = std::unique_ptr<bcl_matrix, MatrixDeleter>;

template <typename Handle, typename Fn>
Handle make(Fn&& fn) {
  typename Handle::pointer raw = nullptr;
  check(fn(&raw));
  return Handle(raw);
}

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out(s ? s : "");
  bcl_string_free(s);
  return out;
}

Json parse_owned(char* s) { return Json::parse(take(s)); }

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Options {
  std::optional<double> alpha;
  std::optional<double> beta;
  std::string symbol_path;
  std::optional<long long> order;
  int grid_radial = 64;
  int grid_angular = 128;
  double rmax = 0.999;
  std::string out_path;
  std::string format = "json";
  std::string f_inline;
  std::string f_file;
  int n = 1;
  std::string which;
  std::string kind = "monomial";
  int m_max = 16;
  std::vector<double> dilations{0.5, 0.9, 0.99, 0.999};
  std::vector<double> t_list;
};

// ---- option plumbing -------------------------------------------------------

void add_alpha(CLI::App* c, Options& o, bool required) {
  auto* opt = c->add_option("--alpha", o.alpha, "Bloch exponent alpha > 0");
  if (required) opt->required();
}

void add_beta(CLI::App* c, Options& o, bool required) {
  auto* opt = c->add_option("--beta", o.beta, "Cesaro exponent beta");
  if (required) opt->required();
}

void add_symbol(CLI::App* c, Options& o) {
  c->add_option("--symbol", o.symbol_path, "symbol JSON file (overrides --beta)");
  add_beta(c, o, false);
}

void add_order(CLI::App* c, Options& o) {
  c->add_option("--N", o.order, "truncation order / matrix size")->check(CLI::PositiveNumber);
}

void add_grid(CLI::App* c, Options& o) {
  c->add_option("--grid-radial", o.grid_radial, "radial grid points")->check(CLI::PositiveNumber);
  c->add_option("--grid-angular", o.grid_angular, "angular grid points")
      ->check(CLI::PositiveNumber);
  c->add_option("--rmax", o.rmax, "outermost sampling radius, < 1");
}

void add_series(CLI::App* c, Options& o) {
  c->add_option("--f", o.f_inline, "series literal: JSON array of reals or [re, im] pairs");
  c->add_option("--f-file", o.f_file, "series JSON file (overrides --f)");
}

void add_output(CLI::App* c, Options& o) {
  c->add_option("--out", o.out_path, "output path (default stdout)");
  c->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

// ---- resolution ------------------------------------------------------------

std::size_t default_order() {
  const char* env = std::getenv("BCL_DEFAULT_N");
  if (!env || !*env) return bcl_default_order();
  char* end = nullptr;
  const long long v = std::strtoll(env, &end, 10);
  if (*end != '\0' || v <= 0) throw UsageError("BCL_DEFAULT_N must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::size_t working_order(const Options& o) {
  return o.order ? static_cast<std::size_t>(*o.order) : default_order();
}

double need_alpha(const Options& o) {
  if (!o.alpha) throw UsageError("--alpha is required");
  return *o.alpha;
}

double need_beta(const Options& o) {
  if (!o.beta) throw UsageError("--beta is required");
  return *o.beta;
}

Series load_series(const Options& o) {
  std::string text;
  if (!o.f_file.empty()) {
    text = read_file(o.f_file);
  } else if (!o.f_inline.empty()) {
    text = o.f_inline;
  } else {
    throw UsageError("a series is required (--f or --f-file)");
  }
  return make<Series>([&](bcl_series** out) { return bcl_series_from_json(text.c_str(), out); });
}

Series resized(const Series& f, std::size_t order) {
  return make<Series>([&](bcl_series** out) { return bcl_series_resize(f.get(), order, out); });
}

std::size_t order_of(const bcl_series* f) {
  std::size_t n = 0;
  check(bcl_series_order(f, &n));
  return n;
}

Symbol load_symbol(const Options& o) {
  if (!o.symbol_path.empty()) {
    const std::string text = read_file(o.symbol_path);
    return make<Symbol>(
        [&](bcl_symbol** out) { return bcl_symbol_from_json(text.c_str(), out); });
  }
  if (o.beta) {
    return make<Symbol>([&](bcl_symbol** out) { return bcl_symbol_beta_cesaro(*o.beta, out); });
  }
  throw UsageError("an operator is required (--symbol or --beta)");
}

Grid load_grid(const Options& o) {
  return make<Grid>([&](bcl_grid** out) {
    return bcl_grid_create_default(o.grid_radial, o.grid_angular, o.rmax, out);
  });
}

Json series_json(const bcl_series* f) {
  char* s = nullptr;
  check(bcl_series_to_json(f, &s));
  return parse_owned(s)["coeffs"];
}

Json symbol_json(const bcl_symbol* s) {
  char* text = nullptr;
  check(bcl_symbol_to_json(s, &text));
  return parse_owned(text);
}

std::complex<double> coeff(const bcl_series* f, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  check(bcl_series_coeff(f, n, &re, &im));
  return {re, im};
}

Json grid_config(const Options& o) {
  return Json{{"radial", o.grid_radial}, {"angular", o.grid_angular}, {"rmax", o.rmax}};
}

Json complex_json(std::complex<double> c) { return Json::array({c.real(), c.imag()}); }

// ---- reports ---------------------------------------------------------------

struct Outcome {
  Json config = Json::object();
  Json result = Json::object();
  std::string csv;
  bool verdict_failed = false;
};

std::string series_csv(const bcl_series* f) {
  char* s = nullptr;
  check(bcl_series_to_csv(f, &s));
  return take(s);
}

// ---- commands --------------------------------------------------------------

Outcome cmd_seminorm(const Options& o) {
  const double alpha = need_alpha(o);
  Series f = load_series(o);
  // Pad short literals so the Horner tail vanishes; an explicit --N always wins.
  const std::size_t order = o.order ? working_order(o) : std::max(order_of(f.get()), working_order(o));
  f = resized(f, order);
  Grid g = load_grid(o);

  bcl_seminorm_result sn{};
  check(bcl_seminorm_estimate(f.get(), alpha, g.get(), &sn));
  double norm = 0.0;
  check(bcl_bloch_norm(f.get(), alpha, g.get(), &norm));
  bcl_growth_result gr{};
  check(bcl_growth_check(f.get(), alpha, g.get(), &gr));

  Outcome out;
  out.config = Json{{"alpha", alpha}, {"N", order}, {"grid", grid_config(o)},
                    {"f", series_json(f.get())}};
  out.result["seminorm"] = Json{{"value", sn.value},
                                {"argmax", Json::array({sn.argmax_re, sn.argmax_im})},
                                {"max_tail", sn.max_tail},
                                {"excluded_points", sn.excluded_points}};
  out.result["norm"] = norm;
  out.result["growth_check"] = Json{{"verdict", gr.passed ? "PASS" : "FAIL"},
                                    {"worst_margin", gr.worst_margin},
                                    {"worst_point", Json::array({gr.worst_re, gr.worst_im})},
                                    {"checked_points", gr.checked_points},
                                    {"excluded_points", gr.excluded_points}};
  out.verdict_failed = !gr.passed;
  char* csv = nullptr;
  check(bcl_seminorm_records_csv(f.get(), alpha, g.get(), &csv));
  out.csv = take(csv);
  return out;
}

Outcome cmd_apply(const Options& o) {
  Series f = load_series(o);
  if (o.order) f = resized(f, working_order(o));
  Outcome out;
  Series y;
  if (!o.symbol_path.empty()) {
    Symbol s = load_symbol(o);
    y = make<Series>([&](bcl_series** r) { return bcl_apply_generalized(f.get(), s.get(), r); });
    out.config["symbol"] = symbol_json(s.get());
  } else {
    const double beta = need_beta(o);
    y = make<Series>([&](bcl_series** r) { return bcl_apply_beta_cesaro(f.get(), beta, r); });
    out.config["beta"] = beta;
  }
  out.config["N"] = order_of(f.get());
  out.config["f"] = series_json(f.get());
  out.result["coeffs"] = series_json(y.get());
  out.csv = series_csv(y.get());
  return out;
}

Outcome cmd_matrix(const Options& o) {
  Symbol s = load_symbol(o);
  const std::size_t n = working_order(o);
  Matrix m = make<Matrix>([&](bcl_matrix** r) { return bcl_operator_matrix(s.get(), n, r); });
  Outcome out;
  out.config = Json{{"symbol", symbol_json(s.get())}, {"N", n}};
  Json rows = Json::array();
  for (std::size_t i = 1; i <= n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 1; j <= n; ++j) {
      double re = 0.0;
      double im = 0.0;
      check(bcl_matrix_entry(m.get(), i, j, &re, &im));
      row.push_back(Json::array({re, im}));
    }
    rows.push_back(std::move(row));
  }
  out.result["size"] = n;
  out.result["entries"] = std::move(rows);
  char* csv = nullptr;
  check(bcl_matrix_to_csv(m.get(), &csv));
  out.csv = take(csv);
  return out;
}

Outcome cmd_spectrum(const Options& o) {
  Symbol s = load_symbol(o);
  const std::size_t n = working_order(o);
  Matrix m = make<Matrix>([&](bcl_matrix** r) { return bcl_operator_matrix(s.get(), n, r); });
  std::vector<double> re(n);
  std::vector<double> im(n);
  check(bcl_truncated_spectrum(m.get(), re.data(), im.data(), n));
  std::complex<double> g0;
  {
    double gr = 0.0;
    double gi = 0.0;
    check(bcl_symbol_g0(s.get(), &gr, &gi));
    g0 = {gr, gi};
  }

  Outcome out;
  out.config = Json{{"symbol", symbol_json(s.get())}, {"N", n}};
  if (o.alpha) out.config["alpha"] = *o.alpha;

  Json eig = Json::array();
  double deviation = 0.0;
  std::ostringstream csv;
  csv << "n,re,im,predicted_re,predicted_im\n";
  for (std::size_t k = 0; k < n; ++k) {
    const std::complex<double> predicted = g0 / static_cast<double>(k + 1);
    deviation = std::max(deviation, std::abs(std::complex<double>(re[k], im[k]) - predicted));
    eig.push_back(Json::array({re[k], im[k]}));
    csv << k + 1 << ',' << num(re[k]) << ',' << num(im[k]) << ',' << num(predicted.real()) << ','
        << num(predicted.imag()) << '\n';
  }
  const double tol = 1e-12 * std::max(1.0, std::abs(g0));
  out.result["eigenvalues"] = std::move(eig);
  out.result["max_deviation_from_g0_over_n"] = deviation;
  out.result["diagonal_check"] = deviation <= tol ? "PASS" : "FAIL";
  out.verdict_failed = deviation > tol;
  if (o.alpha) {
    char* text = nullptr;
    check(bcl_point_spectrum_json(s.get(), *o.alpha, std::min<std::size_t>(n, 8), &text));
    Json ps = parse_owned(text);
    if (ps["admissibility"] == "FAIL") out.verdict_failed = true;
    out.result["point_spectrum"] = std::move(ps);
  }
  out.csv = csv.str();
  return out;
}

Outcome cmd_eigenfunction(const Options& o) {
  Symbol s = load_symbol(o);
  const std::size_t order = working_order(o);
  if (o.n < 1) throw UsageError("--n must be at least 1");
  Series e = make<Series>([&](bcl_series** r) { return bcl_eigenvector(s.get(), o.n, order, r); });
  Series ce = make<Series>([&](bcl_series** r) { return bcl_apply_generalized(e.get(), s.get(), r); });
  double gr = 0.0;
  double gi = 0.0;
  check(bcl_symbol_g0(s.get(), &gr, &gi));
  const std::complex<double> lambda = std::complex<double>(gr, gi) / static_cast<double>(o.n);

  double residual = 0.0;
  double scale = 1.0;
  for (std::size_t k = 0; k <= order; ++k) {
    const auto ek = coeff(e.get(), k);
    scale = std::max(scale, std::abs(ek));
    residual = std::max(residual, std::abs(coeff(ce.get(), k) - lambda * ek));
  }
  const bool ok = residual <= 1e-10 * scale;

  Outcome out;
  out.config = Json{{"symbol", symbol_json(s.get())}, {"n", o.n}, {"N", order}};
  out.result["eigenvalue"] = complex_json(lambda);
  out.result["coeffs"] = series_json(e.get());
  out.result["residual"] = residual;
  out.result["coefficient_scale"] = scale;
  out.result["identity_check"] = ok ? "PASS" : "FAIL";
  if (o.alpha) {
    Grid g = load_grid(o);
    double probe = 0.0;
    check(bcl_approximate_eigen_probe(s.get(), o.n, *o.alpha, g.get(), order, &probe));
    out.config["alpha"] = *o.alpha;
    out.config["grid"] = grid_config(o);
    out.result["approximate_eigen_probe"] = probe;
  }
  out.verdict_failed = !ok;
  out.csv = series_csv(e.get());
  return out;
}

Outcome cmd_classify(const Options& o) {
  const double alpha = need_alpha(o);
  const double beta = need_beta(o);
  unsigned flags = 0;
  char* text = nullptr;
  check(bcl_classify(alpha, beta, &flags, &text));
  Outcome out;
  out.config = Json{{"alpha", alpha}, {"beta", beta}};
  Json c = parse_owned(text);
  out.csv = "verdict,source\n" + c["verdict"].get<std::string>() + ',' +
            c["source"].get<std::string>() + '\n';
  out.result = std::move(c);
  return out;
}

Outcome cmd_bound(const Options& o) {
  const double alpha = need_alpha(o);
  const double beta = need_beta(o);
  double value = 0.0;
  int boundary = 0;
  check(bcl_bound_constant(alpha, beta, &value, &boundary));
  Outcome out;
  out.config = Json{{"alpha", alpha}, {"beta", beta}};
  out.result = Json{{"bound_constant", value}, {"attained_at_boundary", boundary != 0}};
  out.csv = "bound_constant,attained_at_boundary\n" + num(value) + ',' +
            (boundary ? "true" : "false") + '\n';
  return out;
}

bcl_counterexample parse_which(const std::string& w) {
  if (w == "2.6" || w == "Ex26" || w == "ex26") return BCL_EX26;
  if (w == "2.7" || w == "Ex27" || w == "ex27") return BCL_EX27;
  if (w == "2.8" || w == "Ex28" || w == "ex28") return BCL_EX28;
  throw UsageError("--which must be one of 2.6, 2.7, 2.8");
}

Outcome cmd_counterexample(const Options& o) {
  const double alpha = need_alpha(o);
  const double beta = need_beta(o);
  if (o.which.empty()) throw UsageError("--which is required");
  const bcl_counterexample which = parse_which(o.which);
  char* text = nullptr;
  check(bcl_counterexample_probe_json(alpha, beta, which, o.t_list.empty() ? nullptr : o.t_list.data(),
                                      o.t_list.size(), &text));
  Json rep = parse_owned(text);
  static const char* names[] = {"Ex26", "Ex27", "Ex28"};
  Outcome out;
  out.config = Json{{"alpha", alpha}, {"beta", beta}, {"which", names[which]}};
  if (!o.t_list.empty()) out.config["t"] = o.t_list;
  std::ostringstream csv;
  csv << "t,value\n";
  for (const auto& s : rep["samples"]) csv << num(s[0].get<double>()) << ',' << num(s[1].get<double>()) << '\n';
  out.csv = csv.str();
  out.verdict_failed = rep["verdict"] != "diverges";
  out.result = std::move(rep);
  return out;
}

Outcome cmd_compactness(const Options& o) {
  const double alpha = need_alpha(o);
  Symbol s = load_symbol(o);
  Grid g = load_grid(o);
  const std::size_t order = working_order(o);
  bcl_family_kind kind;
  if (o.kind == "monomial") {
    kind = BCL_FAMILY_MONOMIAL;
  } else if (o.kind == "dilation") {
    kind = BCL_FAMILY_DILATION;
  } else {
    throw UsageError("--kind must be monomial or dilation");
  }
  char* text = nullptr;
  check(bcl_compactness_probe_json(s.get(), alpha, kind, o.m_max, g.get(), order, &text));
  Json rep = parse_owned(text);
  Outcome out;
  out.config = Json{{"symbol", symbol_json(s.get())}, {"alpha", alpha}, {"kind", o.kind},
                    {"m_max", o.m_max}, {"N", order}, {"grid", grid_config(o)}};
  std::ostringstream csv;
  csv << "m,norm\n";
  for (const auto& r : rep["samples"])
    csv << num(r["m"].get<double>()) << ',' << num(r["norm"].get<double>()) << '\n';
  out.csv = csv.str();
  out.verdict_failed = rep["verdict"] != "compact-consistent";
  out.result = std::move(rep);
  return out;
}

Outcome cmd_essnorm(const Options& o) {
  const double alpha = need_alpha(o);
  Symbol s = load_symbol(o);
  Grid g = load_grid(o);
  const std::size_t order = working_order(o);
  char* text = nullptr;
  check(bcl_essential_norm_probe_json(s.get(), alpha, o.dilations.data(), o.dilations.size(),
                                      g.get(), order, &text));
  Json rep = parse_owned(text);
  Outcome out;
  out.config = Json{{"symbol", symbol_json(s.get())}, {"alpha", alpha},
                    {"dilations", o.dilations}, {"N", order}, {"grid", grid_config(o)}};
  std::ostringstream csv;
  csv << "dilation,max_distance,argmax_member\n";
  for (const auto& r : rep["samples"])
    csv << num(r["dilation"].get<double>()) << ',' << num(r["max_distance"].get<double>()) << ','
        << r["argmax_member"].get<std::size_t>() << '\n';
  out.csv = csv.str();
  out.verdict_failed = rep["verdict"] != "compact-consistent";
  out.result = std::move(rep);
  return out;
}

Outcome cmd_preimage(const Options& o) {
  Series g = load_series(o);
  if (o.order) g = resized(g, working_order(o));
  Series f = make<Series>([&](bcl_series** r) { return bcl_preimage_under_cesaro(g.get(), r); });
  Series back = make<Series>([&](bcl_series** r) { return bcl_apply_beta_cesaro(f.get(), 1.0, r); });
  const std::size_t n = std::min(order_of(g.get()), order_of(back.get()));
  double err = 0.0;
  for (std::size_t k = 0; k <= n; ++k)
    err = std::max(err, std::abs(coeff(back.get(), k) - coeff(g.get(), k)));
  const bool ok = err <= 1e-12;

  Outcome out;
  out.config = Json{{"N", order_of(g.get())}, {"g", series_json(g.get())}};
  out.result["coeffs"] = series_json(f.get());
  out.result["round_trip_error"] = err;
  out.result["round_trip_check"] = ok ? "PASS" : "FAIL";
  out.verdict_failed = !ok;
  out.csv = series_csv(f.get());
  return out;
}

void emit(const Options& o, const std::string& command, const Outcome& r) {
  std::string text;
  if (o.format == "csv") {
    text = r.csv;
  } else {
    Json report{{"schema", "bcl-report/1"}, {"command", command}, {"config", r.config},
                {"result", r.result}};
    text = report.dump() + "\n";
  }
  if (o.out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write '" + o.out_path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cesaro-type operators on alpha-Bloch spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bcl_version()));
  Options o;

  using Handler = Outcome (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto* seminorm = app.add_subcommand("seminorm", "alpha-Bloch seminorm, norm and growth check");
  add_alpha(seminorm, o, true);
  add_series(seminorm, o);
  add_order(seminorm, o);
  add_grid(seminorm, o);
  commands.emplace_back(seminorm, cmd_seminorm);

  auto* apply = app.add_subcommand("apply", "apply C_beta or a generalized operator to a series");
  add_series(apply, o);
  add_symbol(apply, o);
  add_order(apply, o);
  commands.emplace_back(apply, cmd_apply);

  auto* matrix = app.add_subcommand("matrix", "N x N coefficient matrix of the operator");
  add_symbol(matrix, o);
  add_order(matrix, o);
  commands.emplace_back(matrix, cmd_matrix);

  auto* spectrum = app.add_subcommand("spectrum", "truncated and predicted point spectrum");
  add_symbol(spectrum, o);
  add_order(spectrum, o);
  add_alpha(spectrum, o, false);
  commands.emplace_back(spectrum, cmd_spectrum);

  auto* eigen = app.add_subcommand("eigenfunction", "eigenvector z^n psi_n and identity check");
  add_symbol(eigen, o);
  add_order(eigen, o);
  add_alpha(eigen, o, false);
  add_grid(eigen, o);
  eigen->add_option("--n", o.n, "eigenvalue index n >= 1");
  commands.emplace_back(eigen, cmd_eigenfunction);

  auto* classify = app.add_subcommand("classify", "boundedness / compactness classification");
  add_alpha(classify, o, true);
  add_beta(classify, o, true);
  commands.emplace_back(classify, cmd_classify);

  auto* bound = app.add_subcommand("bound", "operator bound constant");
  add_alpha(bound, o, true);
  add_beta(bound, o, true);
  commands.emplace_back(bound, cmd_bound);

  auto* counter = app.add_subcommand("counterexample", "divergence probe with exponent fit");
  add_alpha(counter, o, true);
  add_beta(counter, o, true);
  counter->add_option("--which", o.which, "2.6, 2.7 or 2.8")->required();
  counter->add_option("--t", o.t_list, "sample abscissae in (0,1)")->delimiter(',');
  commands.emplace_back(counter, cmd_counterexample);

  auto* compact = app.add_subcommand("compactness", "operator norms along a null family");
  add_symbol(compact, o);
  add_alpha(compact, o, true);
  add_order(compact, o);
  add_grid(compact, o);
  compact->add_option("--kind", o.kind, "monomial or dilation");
  compact->add_option("--m-max", o.m_max, "family length")->check(CLI::PositiveNumber);
  commands.emplace_back(compact, cmd_compactness);

  auto* essnorm = app.add_subcommand("essnorm", "distance to compact approximants");
  add_symbol(essnorm, o);
  add_alpha(essnorm, o, true);
  add_order(essnorm, o);
  add_grid(essnorm, o);
  essnorm->add_option("--dilations", o.dilations, "dilation parameters in (0,1)")->delimiter(',');
  commands.emplace_back(essnorm, cmd_essnorm);

  auto* preimage = app.add_subcommand("preimage", "f = z(1-z)g' and the C_1 round trip");
  add_series(preimage, o);
  add_order(preimage, o);
  commands.emplace_back(preimage, cmd_preimage);

  for (auto& [sub, _] : commands) add_output(sub, o);

  if (argc > 1 && argv[1][0] != '-') {
    const std::string name = argv[1];
    const bool known = std::any_of(commands.begin(), commands.end(),
                                   [&](const auto& c) { return c.first->get_name() == name; });
    if (!known) {
      std::cerr << "bcl: unknown command '" << name << "'\n";
      return kExitUsage;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "bcl: " << e.what() << '\n';
    return kExitUsage;
  }

  for (auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    try {
      const Outcome r = handler(o);
      emit(o, sub->get_name(), r);
      return r.verdict_failed ? kExitVerdict : kExitOk;
    } catch (const UsageError& e) {
      std::cerr << "bcl: " << e.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& e) {
      std::cerr << "bcl: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return kExitUsage;
}
