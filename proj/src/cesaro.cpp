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

#include "bcl/cesaro.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bcl {
namespace {

constexpr double kZeroG0 = 1e-14;

bool g0_vanishes(Complex g0) { return std::abs(g0) <= kZeroG0; }

}  // namespace

SymbolGBeta::SymbolGBeta(std::vector<SymbolTerm> terms, double beta, PowerSeries h)
    : terms_(std::move(terms)), beta_(beta), h_(std::move(h)) {
  if (!std::isfinite(beta_)) throw ContractViolation("symbol: beta must be finite");
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    const auto& t = terms_[j];
    if (!(std::abs(t.a) > 0.0) || !std::isfinite(std::abs(t.a)))
      throw ContractViolation("symbol: |a_j| must be positive and finite");
    if (!(std::abs(std::abs(t.b) - 1.0) <= kUnimodularTol))
      throw ContractViolation("symbol: b_j must lie on the unit circle");
    for (std::size_t i = 0; i < j; ++i) {
      if (std::abs(terms_[i].b - t.b) <= kUnimodularTol)
        throw ContractViolation("symbol: b_j must be pairwise distinct");
    }
  }
}

SymbolGBeta SymbolGBeta::from_angles(const std::vector<std::pair<Complex, double>>& terms,
                                     double beta, PowerSeries h) {
  std::vector<SymbolTerm> t;
  t.reserve(terms.size());
  for (const auto& [a, theta] : terms) {
    if (!std::isfinite(theta)) throw ContractViolation("symbol: non-finite angle");
    t.push_back({a, std::polar(1.0, theta)});
  }
  return SymbolGBeta(std::move(t), beta, std::move(h));
}

SymbolGBeta SymbolGBeta::beta_cesaro(double beta) {
  return SymbolGBeta({{1.0, 1.0}}, beta, PowerSeries(0));
}

Complex SymbolGBeta::g0() const {
  Complex s = h_[0];
  for (const auto& t : terms_) s += t.a;
  return s;
}

double SymbolGBeta::h_sup_norm(const SampleGrid& g) const { return grid_sup_modulus(h_, g); }

PowerSeries symbol_series(const SymbolGBeta& s, std::size_t order) {
  PowerSeries out = s.h().resized(order);
  for (const auto& t : s.terms()) out = out + t.a * binomial_series(s.beta(), t.b, order);
  return out;
}

PowerSeries apply_generalized(const PowerSeries& f, const SymbolGBeta& s) {
  const PowerSeries q = ps_div_by_z(f);
  return ps_integrate(ps_mul(q, symbol_series(s, q.order()))).resized(f.order());
}

PowerSeries apply_beta_cesaro(const PowerSeries& f, double beta) {
  return apply_generalized(f, SymbolGBeta::beta_cesaro(beta));
}

OperatorMatrix::OperatorMatrix(std::size_t size, std::vector<Complex> row_major)
    : size_(size), entries_(std::move(row_major)) {
  if (size_ == 0) throw ContractViolation("operator matrix size must be >= 1");
  if (entries_.size() != size_ * size_) throw ContractViolation("operator matrix shape mismatch");
  for (std::size_t m = 0; m < size_; ++m)
    for (std::size_t n = m + 1; n < size_; ++n)
      if (entries_[m * size_ + n] != Complex{})
        throw ContractViolation("operator matrix must be lower triangular");
}

Complex OperatorMatrix::entry(std::size_t m, std::size_t n) const {
  if (m < 1 || n < 1 || m > size_ || n > size_)
    throw ContractViolation("operator matrix index out of range");
  return entries_[(m - 1) * size_ + (n - 1)];
}

PowerSeries OperatorMatrix::apply(const PowerSeries& f) const {
  if (f[0] != Complex{}) throw DomainError("f(0) != 0: function is not in H_0");
  const PowerSeries c = f.resized(size_);
  std::vector<Complex> out(size_ + 1, Complex{});
  for (std::size_t m = 1; m <= size_; ++m) {
    Complex acc{};
    for (std::size_t n = 1; n <= m; ++n) acc += entries_[(m - 1) * size_ + (n - 1)] * c[n];
    out[m] = acc;
  }
  return PowerSeries(std::move(out));
}

OperatorMatrix operator_matrix(const SymbolGBeta& s, std::size_t size) {
  if (size < 1) throw ContractViolation("operator matrix size must be >= 1");
  const PowerSeries gamma = symbol_series(s, size);
  std::vector<Complex> e(size * size, Complex{});
  for (std::size_t m = 1; m <= size; ++m)
    for (std::size_t n = 1; n <= m; ++n)
      e[(m - 1) * size + (n - 1)] = gamma[m - n] / static_cast<double>(m);
  return OperatorMatrix(size, std::move(e));
}

std::vector<Complex> truncated_spectrum(const OperatorMatrix& m) {
  std::vector<Complex> d(m.size());
  for (std::size_t i = 1; i <= m.size(); ++i) d[i - 1] = m.entry(i, i);
  std::stable_sort(d.begin(), d.end(),
                   [](Complex x, Complex y) { return std::abs(x) > std::abs(y); });
  return d;
}

namespace {

// exp(k * int_0^z (u(w) - u(0)) / w dw) for a series u.
PowerSeries exp_log_integral(const PowerSeries& u, Complex k) {
  const PowerSeries centered = u - PowerSeries::constant(u[0], u.order());
  const PowerSeries exponent = ps_integrate(ps_div_by_z(centered));
  return ps_exp(k * exponent.resized(u.order()));
}

Complex psi_scale(const SymbolGBeta& s, int n) {
  if (n < 1) throw ContractViolation("eigenfunction index n must be >= 1");
  const Complex g0 = s.g0();
  if (g0_vanishes(g0)) throw SpectrumEmptyError("g(0) = 0: the point spectrum is empty");
  return static_cast<double>(n) / g0;
}

}  // namespace

PowerSeries eigenfunction_psi(const SymbolGBeta& s, int n, std::size_t order) {
  const Complex k = psi_scale(s, n);
  return exp_log_integral(symbol_series(s, order), k);
}

PowerSeries eigenfunction_eta(const SymbolGBeta& s, int n, std::size_t order) {
  const Complex k = psi_scale(s, n);
  return exp_log_integral(s.h().resized(order), k);
}

PowerSeries eigenvector(const SymbolGBeta& s, int n, std::size_t order) {
  const Complex k = psi_scale(s, n);
  const std::size_t shift = static_cast<std::size_t>(n);
  std::vector<Complex> c(order + 1, Complex{});
  if (shift <= order) {
    const PowerSeries psi = exp_log_integral(symbol_series(s, order - shift), k);
    for (std::size_t i = 0; i <= order - shift; ++i) c[i + shift] = psi[i];
  }
  return PowerSeries(std::move(c));
}

const char* to_string(SpectrumStatus s) {
  switch (s) {
    case SpectrumStatus::Admissible: return "PASS";
    case SpectrumStatus::NotAdmissible: return "FAIL";
    case SpectrumStatus::Unconditional: return "UNCONDITIONAL";
    case SpectrumStatus::Empty: return "EMPTY";
    case SpectrumStatus::NotCovered: return "NOT_COVERED";
  }
  return "?";
}

std::vector<Complex> SpectrumReport::eigenvalues(std::size_t count) const {
  std::vector<Complex> out;
  if (status == SpectrumStatus::Empty) return out;
  out.reserve(count);
  for (std::size_t n = 1; n <= count; ++n) out.push_back(g0 / static_cast<double>(n));
  return out;
}

SpectrumReport point_spectrum(const SymbolGBeta& s, double alpha) {
  if (!(alpha > 0.0)) throw ContractViolation("alpha must be positive");
  SpectrumReport rep;
  rep.g0 = s.g0();
  const double beta = s.beta();
  if (g0_vanishes(rep.g0)) {
    rep.status = SpectrumStatus::Empty;
    rep.source = "Thm 5.1";
    rep.note = "g(0) = 0";
    return rep;
  }
  if (beta <= 0.0) {
    rep.status = SpectrumStatus::Unconditional;
    rep.source = "Thm 5.2";
    if (beta < 0.0) rep.note = "non-positive beta: symbol is bounded, generalized Alexander case";
    return rep;
  }
  if (beta == 1.0) {
    if (alpha < 1.0) {
      rep.status = SpectrumStatus::NotCovered;
      rep.note = "beta = 1 requires alpha >= 1";
      return rep;
    }
    rep.source = "Thm 5.1";
    bool all = true;
    for (std::size_t j = 0; j < s.terms().size(); ++j) {
      const double ratio = (s.terms()[j].a / rep.g0).real();
      const bool ok = ratio <= 0.0;
      rep.terms.push_back({j, ratio, ok});
      all = all && ok;
    }
    rep.status = all ? SpectrumStatus::Admissible : SpectrumStatus::NotAdmissible;
    if (!all) rep.note = "Re(a_j / g(0)) > 0 for some term; see per-term verdicts";
    return rep;
  }
  if (beta < 1.0 && (beta <= alpha || alpha >= 1.0)) {
    rep.status = SpectrumStatus::Unconditional;
    rep.source = "Thm 5.4";
    rep.note = "certified for beta < m/(m+1) for every m, i.e. beta < 1";
    return rep;
  }
  rep.status = SpectrumStatus::NotCovered;
  rep.note = beta > 1.0 ? "beta > 1 is not covered" : "0 < alpha < beta < 1 is not covered";
  return rep;
}

PowerSeries compact_approximant(const PowerSeries& f, const SymbolGBeta& s, double dilation) {
  if (!(dilation > 0.0 && dilation < 1.0))
    throw DomainError("compact_approximant: dilation must lie in (0, 1)");
  return apply_generalized(f.dilated(dilation), s);
}

double approximate_eigen_probe(const SymbolGBeta& s, int n, BlochParams p, const SampleGrid& g,
                               std::size_t order) {
  if (n < 1) throw ContractViolation("approximate_eigen_probe: n must be >= 1");
  if (static_cast<std::size_t>(n) > order)
    throw ContractViolation("approximate_eigen_probe: order must be >= n");
  const PowerSeries zn = PowerSeries::monomial(static_cast<std::size_t>(n), order);
  const double norm = seminorm_estimate(zn, p, g).value;
  const PowerSeries hn = Complex(1.0 / norm) * zn;
  return seminorm_estimate(apply_generalized(hn, s), p, g).value;
}

PowerSeries preimage_under_cesaro(const PowerSeries& g) {
  if (g[0] != Complex{}) throw DomainError("preimage: g(0) != 0");
  const std::size_t order = g.order();
  if (order == 0) return PowerSeries(0);
  std::vector<Complex> zdg(order + 1, Complex{});
  for (std::size_t n = 1; n <= order; ++n) zdg[n] = static_cast<double>(n) * g[n];
  std::vector<Complex> one_minus_z(order + 1, Complex{});
  one_minus_z[0] = 1.0;
  one_minus_z[1] = -1.0;
  return ps_mul(PowerSeries(std::move(zdg)), PowerSeries(std::move(one_minus_z)));
}

}  // namespace bcl
