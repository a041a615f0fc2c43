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
#include <string>
#include <vector>

#include "bcl/bloch.hpp"
#include "bcl/series.hpp"

namespace bcl {

/// One pole term a / (1 - b w)^beta of the operator symbol.
struct SymbolTerm {
  Complex a;
  Complex b;
};

/// Tolerance on |b_j| = 1 and on pairwise distinctness of the b_j.
inline constexpr double kUnimodularTol = 1e-12;

/// Symbol g(w) = sum_j a_j (1 - b_j w)^{-beta} + h(w) of the generalized
/// beta-Cesaro operator f -> int_0^z f(w) g(w) / w dw.
///
/// Invariants: |a_j| > 0, |b_j| = 1 and the b_j pairwise distinct (both up
/// to kUnimodularTol), beta finite. h is a truncated bounded analytic part.
class SymbolGBeta {
 public:
  SymbolGBeta(std::vector<SymbolTerm> terms, double beta, PowerSeries h);

  /// Terms given by (a_j, theta_j) with b_j = exp(i theta_j).
  static SymbolGBeta from_angles(const std::vector<std::pair<Complex, double>>& terms,
                                 double beta, PowerSeries h);
  /// (1 - w)^{-beta}: the plain beta-Cesaro symbol. beta = 0 gives g == 1.
  static SymbolGBeta beta_cesaro(double beta);

  const std::vector<SymbolTerm>& terms() const { return terms_; }
  double beta() const { return beta_; }
  const PowerSeries& h() const { return h_; }

  /// g(0) = sum_j a_j + h(0).
  Complex g0() const;
  /// Grid estimate of the sup norm of h.
  double h_sup_norm(const SampleGrid& g) const;

 private:
  std::vector<SymbolTerm> terms_;
  double beta_;
  PowerSeries h_;
};

/// Taylor coefficients gamma_0..gamma_N of the symbol.
PowerSeries symbol_series(const SymbolGBeta& s, std::size_t order);

/// C_g(f) = int_0^z f(w) g(w) / w dw, exact in coefficients:
/// out_m = (1/m) sum_{n=1..m} c_n gamma_{m-n}. Output order equals f's order.
PowerSeries apply_generalized(const PowerSeries& f, const SymbolGBeta& s);
PowerSeries apply_beta_cesaro(const PowerSeries& f, double beta);

/// Lower-triangular coefficient matrix of C_g acting on z^1..z^N.
/// entry(m, n) = gamma_{m-n} / m for 1 <= n <= m <= N (1-based).
class OperatorMatrix {
 public:
  OperatorMatrix(std::size_t size, std::vector<Complex> row_major);

  std::size_t size() const { return size_; }
  /// 1-based indices, as in the coefficient of z^m from input z^n.
  Complex entry(std::size_t m, std::size_t n) const;
  /// Matrix times (c_1..c_N); c_0 must be 0. Returns a series of order N.
  PowerSeries apply(const PowerSeries& f) const;

 private:
  std::size_t size_;
  std::vector<Complex> entries_;
};

OperatorMatrix operator_matrix(const SymbolGBeta& s, std::size_t size);

/// Diagonal of the (triangular) truncation sorted by decreasing modulus;
/// ties keep index order.
std::vector<Complex> truncated_spectrum(const OperatorMatrix& m);

/// psi_n = exp((n / g(0)) int_0^z (g(w) - g(0)) / w dw) to order N. The
/// eigenvector for g(0)/n is z^n psi_n. Throws SpectrumEmptyError if g(0) = 0.
PowerSeries eigenfunction_psi(const SymbolGBeta& s, int n, std::size_t order);

/// The h-dependent factor eta = exp((n / g(0)) int_0^z (h(w) - h(0)) / w dw).
PowerSeries eigenfunction_eta(const SymbolGBeta& s, int n, std::size_t order);

/// z^n psi_n truncated to the given order.
PowerSeries eigenvector(const SymbolGBeta& s, int n, std::size_t order);

enum class SpectrumStatus {
  Admissible,     // condition checked and satisfied for every term
  NotAdmissible,  // some term violates Re(a_j / g(0)) <= 0
  Unconditional,  // no condition needed for this parameter range
  Empty,          // g(0) = 0
  NotCovered,     // (alpha, beta) outside the proven cases
};

const char* to_string(SpectrumStatus s);

struct TermAdmissibility {
  std::size_t index = 0;
  double re_ratio = 0.0;  // Re(a_j / g(0))
  bool admissible = false;
};

struct SpectrumReport {
  Complex g0;
  SpectrumStatus status = SpectrumStatus::NotCovered;
  std::vector<TermAdmissibility> terms;  // filled when the per-term condition applies
  std::string source;
  std::string note;

  /// g(0)/n for n = 1..count; empty when status is Empty.
  std::vector<Complex> eigenvalues(std::size_t count) const;
};

SpectrumReport point_spectrum(const SymbolGBeta& s, double alpha);

/// K_s(f) = int_0^z f(s t) g(t) / t dt for 0 < s < 1.
PowerSeries compact_approximant(const PowerSeries& f, const SymbolGBeta& s, double dilation);

/// || C_g(h_n) || on the grid, h_n = z^n / ||z^n|| (unit seminorm).
double approximate_eigen_probe(const SymbolGBeta& s, int n, BlochParams p, const SampleGrid& g,
                               std::size_t order = kDefaultOrder);

/// f = z (1 - z) g', so that apply_beta_cesaro(f, 1) reproduces g.
PowerSeries preimage_under_cesaro(const PowerSeries& g);

}  // namespace bcl
