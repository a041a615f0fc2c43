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

#include "bcl/bcl.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "bcl/bloch.hpp"
#include "bcl/bounds.hpp"
#include "bcl/cesaro.hpp"
#include "bcl/compactness.hpp"
#include "bcl/io.hpp"
#include "bcl/series.hpp"

struct bcl_series {
  bcl::PowerSeries value;
};
struct bcl_grid {
  bcl::SampleGrid value;
};
struct bcl_symbol {
  bcl::SymbolGBeta value;
};
struct bcl_matrix {
  bcl::OperatorMatrix value;
};

namespace {

thread_local std::string last_error;

bcl_status fail(bcl_status s, const char* what) {
  last_error = what;
  return s;
}

struct NullArgument {};

template <typename T>
const T& deref(const T* p) {
  if (!p) throw NullArgument{};
  return *p;
}

const char* text_arg(const char* p) {
  if (!p) throw NullArgument{};
  return p;
}

template <typename T>
T& out_ref(T* p) {
  if (!p) throw NullArgument{};
  return *p;
}

// Runs fn, mapping library exceptions onto status codes.
template <typename Fn>
bcl_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return BCL_OK;
  } catch (const NullArgument&) {
    return fail(BCL_ERR_NULL_ARGUMENT, "null argument");
  } catch (const bcl::DomainError& e) {
    return fail(BCL_ERR_DOMAIN, e.what());
  } catch (const bcl::SpectrumEmptyError& e) {
    return fail(BCL_ERR_SPECTRUM_EMPTY, e.what());
  } catch (const bcl::ContractViolation& e) {
    return fail(BCL_ERR_CONTRACT, e.what());
  } catch (const bcl::FormatError& e) {
    return fail(BCL_ERR_FORMAT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BCL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BCL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BCL_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void emit(bcl_series** out, bcl::PowerSeries f) {
  out_ref(out) = new bcl_series{std::move(f)};
}

void emit(char** out, const std::string& s) { out_ref(out) = dup_string(s); }

}  // namespace

extern "C" {

const char* bcl_version(void) { return "1.0.0"; }

const char* bcl_last_error(void) { return last_error.c_str(); }

const char* bcl_status_name(bcl_status status) {
  switch (status) {
    case BCL_OK: return "ok";
    case BCL_ERR_DOMAIN: return "domain error";
    case BCL_ERR_SPECTRUM_EMPTY: return "empty spectrum";
    case BCL_ERR_CONTRACT: return "contract violation";
    case BCL_ERR_FORMAT: return "format error";
    case BCL_ERR_NULL_ARGUMENT: return "null argument";
    case BCL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void bcl_string_free(char* s) { std::free(s); }

size_t bcl_default_order(void) { return bcl::kDefaultOrder; }

bcl_status bcl_series_create(const double* re, const double* im, size_t count, bcl_series** out) {
  return guarded([&] {
    if (!re) throw NullArgument{};
    if (count == 0) throw bcl::ContractViolation("series needs at least one coefficient");
    std::vector<bcl::Complex> c(count);
    for (size_t i = 0; i < count; ++i) c[i] = {re[i], im ? im[i] : 0.0};
    emit(out, bcl::PowerSeries(std::move(c)));
  });
}

bcl_status bcl_series_monomial(size_t degree, size_t order, bcl_series** out) {
  return guarded([&] { emit(out, bcl::PowerSeries::monomial(degree, order)); });
}

bcl_status bcl_series_from_json(const char* json, bcl_series** out) {
  return guarded([&] { emit(out, bcl::io::parse_series(text_arg(json))); });
}

bcl_status bcl_series_to_json(const bcl_series* f, char** out) {
  return guarded([&] { emit(out, bcl::io::to_json(deref(f).value).dump()); });
}

bcl_status bcl_series_to_csv(const bcl_series* f, char** out) {
  return guarded([&] { emit(out, bcl::io::series_to_csv(deref(f).value)); });
}

void bcl_series_free(bcl_series* f) { delete f; }

bcl_status bcl_series_order(const bcl_series* f, size_t* order) {
  return guarded([&] { out_ref(order) = deref(f).value.order(); });
}

bcl_status bcl_series_coeff(const bcl_series* f, size_t n, double* re, double* im) {
  return guarded([&] {
    const auto& s = deref(f).value;
    if (n > s.order()) throw bcl::ContractViolation("coefficient index beyond series order");
    out_ref(re) = s[n].real();
    out_ref(im) = s[n].imag();
  });
}

bcl_status bcl_series_resize(const bcl_series* f, size_t order, bcl_series** out) {
  return guarded([&] { emit(out, deref(f).value.resized(order)); });
}

bcl_status bcl_pochhammer(double a_re, double a_im, int n, double* re, double* im) {
  return guarded([&] {
    const auto p = bcl::pochhammer({a_re, a_im}, n);
    out_ref(re) = p.real();
    out_ref(im) = p.imag();
  });
}

bcl_status bcl_binomial_series(double beta, double b_re, double b_im, size_t order,
                               bcl_series** out) {
  return guarded([&] { emit(out, bcl::binomial_series(beta, {b_re, b_im}, order)); });
}

bcl_status bcl_series_mul(const bcl_series* f, const bcl_series* g, bcl_series** out) {
  return guarded([&] { emit(out, bcl::ps_mul(deref(f).value, deref(g).value)); });
}

bcl_status bcl_series_exp(const bcl_series* u, bcl_series** out) {
  return guarded([&] { emit(out, bcl::ps_exp(deref(u).value)); });
}

bcl_status bcl_series_integrate(const bcl_series* f, bcl_series** out) {
  return guarded([&] { emit(out, bcl::ps_integrate(deref(f).value)); });
}

bcl_status bcl_series_derivative(const bcl_series* f, bcl_series** out) {
  return guarded([&] { emit(out, bcl::ps_derivative(deref(f).value)); });
}

bcl_status bcl_series_div_by_z(const bcl_series* f, bcl_series** out) {
  return guarded([&] { emit(out, bcl::ps_div_by_z(deref(f).value)); });
}

bcl_status bcl_series_eval(const bcl_series* f, double z_re, double z_im, double* re, double* im,
                           double* tail_estimate) {
  return guarded([&] {
    const auto ev = bcl::ps_eval(deref(f).value, {z_re, z_im});
    out_ref(re) = ev.value.real();
    out_ref(im) = ev.value.imag();
    if (tail_estimate) *tail_estimate = ev.tail_estimate;
  });
}

bcl_status bcl_grid_create_default(int n_radial, int n_angular, double r_max, bcl_grid** out) {
  return guarded([&] { out_ref(out) = new bcl_grid{bcl::default_grid(n_radial, n_angular, r_max)}; });
}

void bcl_grid_free(bcl_grid* g) { delete g; }

bcl_status bcl_grid_shape(const bcl_grid* g, size_t* n_radii, size_t* n_angles) {
  return guarded([&] {
    out_ref(n_radii) = deref(g).value.radii().size();
    out_ref(n_angles) = deref(g).value.angles().size();
  });
}

bcl_status bcl_seminorm_estimate(const bcl_series* f, double alpha, const bcl_grid* g,
                                 bcl_seminorm_result* out) {
  return guarded([&] {
    const auto e = bcl::seminorm_estimate(deref(f).value, bcl::BlochParams(alpha), deref(g).value);
    out_ref(out) = {e.value, e.argmax.real(), e.argmax.imag(), e.max_tail, e.excluded_points};
  });
}

bcl_status bcl_bloch_norm(const bcl_series* f, double alpha, const bcl_grid* g, double* out) {
  return guarded([&] {
    out_ref(out) = bcl::bloch_norm(deref(f).value, bcl::BlochParams(alpha), deref(g).value);
  });
}

bcl_status bcl_growth_bound(double alpha, double r, double seminorm, double f0, double* out) {
  return guarded(
      [&] { out_ref(out) = bcl::growth_bound(bcl::BlochParams(alpha), r, seminorm, f0); });
}

bcl_status bcl_growth_check(const bcl_series* f, double alpha, const bcl_grid* g,
                            bcl_growth_result* out) {
  return guarded([&] {
    const auto v = bcl::growth_check(deref(f).value, bcl::BlochParams(alpha), deref(g).value);
    out_ref(out) = {v.passed ? 1 : 0,     v.worst_margin,     v.worst_point.real(),
                    v.worst_point.imag(), v.checked_points, v.excluded_points};
  });
}

bcl_status bcl_seminorm_records_csv(const bcl_series* f, double alpha, const bcl_grid* g,
                                    char** out) {
  return guarded([&] {
    emit(out, bcl::io::records_to_csv(
                  bcl::seminorm_records(deref(f).value, bcl::BlochParams(alpha), deref(g).value)));
  });
}

bcl_status bcl_symbol_create(double beta, const double* a_re, const double* a_im,
                             const double* b_angle, size_t count, const bcl_series* h,
                             bcl_symbol** out) {
  return guarded([&] {
    if (count > 0 && (!a_re || !b_angle)) throw NullArgument{};
    std::vector<std::pair<bcl::Complex, double>> terms;
    for (size_t j = 0; j < count; ++j)
      terms.emplace_back(bcl::Complex(a_re[j], a_im ? a_im[j] : 0.0), b_angle[j]);
    bcl::PowerSeries hs = h ? h->value : bcl::PowerSeries(0);
    out_ref(out) = new bcl_symbol{bcl::SymbolGBeta::from_angles(terms, beta, std::move(hs))};
  });
}

bcl_status bcl_symbol_beta_cesaro(double beta, bcl_symbol** out) {
  return guarded([&] { out_ref(out) = new bcl_symbol{bcl::SymbolGBeta::beta_cesaro(beta)}; });
}

bcl_status bcl_symbol_from_json(const char* json, bcl_symbol** out) {
  return guarded([&] { out_ref(out) = new bcl_symbol{bcl::io::parse_symbol(text_arg(json))}; });
}

bcl_status bcl_symbol_to_json(const bcl_symbol* s, char** out) {
  return guarded([&] { emit(out, bcl::io::to_json(deref(s).value).dump()); });
}

void bcl_symbol_free(bcl_symbol* s) { delete s; }

bcl_status bcl_symbol_g0(const bcl_symbol* s, double* re, double* im) {
  return guarded([&] {
    const auto g0 = deref(s).value.g0();
    out_ref(re) = g0.real();
    out_ref(im) = g0.imag();
  });
}

bcl_status bcl_symbol_beta(const bcl_symbol* s, double* beta) {
  return guarded([&] { out_ref(beta) = deref(s).value.beta(); });
}

bcl_status bcl_symbol_series(const bcl_symbol* s, size_t order, bcl_series** out) {
  return guarded([&] { emit(out, bcl::symbol_series(deref(s).value, order)); });
}

bcl_status bcl_apply_generalized(const bcl_series* f, const bcl_symbol* s, bcl_series** out) {
  return guarded([&] { emit(out, bcl::apply_generalized(deref(f).value, deref(s).value)); });
}

bcl_status bcl_apply_beta_cesaro(const bcl_series* f, double beta, bcl_series** out) {
  return guarded([&] { emit(out, bcl::apply_beta_cesaro(deref(f).value, beta)); });
}

bcl_status bcl_compact_approximant(const bcl_series* f, const bcl_symbol* s, double dilation,
                                   bcl_series** out) {
  return guarded(
      [&] { emit(out, bcl::compact_approximant(deref(f).value, deref(s).value, dilation)); });
}

bcl_status bcl_preimage_under_cesaro(const bcl_series* g, bcl_series** out) {
  return guarded([&] { emit(out, bcl::preimage_under_cesaro(deref(g).value)); });
}

bcl_status bcl_operator_matrix(const bcl_symbol* s, size_t size, bcl_matrix** out) {
  return guarded([&] { out_ref(out) = new bcl_matrix{bcl::operator_matrix(deref(s).value, size)}; });
}

void bcl_matrix_free(bcl_matrix* m) { delete m; }

bcl_status bcl_matrix_size(const bcl_matrix* m, size_t* size) {
  return guarded([&] { out_ref(size) = deref(m).value.size(); });
}

bcl_status bcl_matrix_entry(const bcl_matrix* m, size_t row, size_t col, double* re, double* im) {
  return guarded([&] {
    const auto e = deref(m).value.entry(row, col);
    out_ref(re) = e.real();
    out_ref(im) = e.imag();
  });
}

bcl_status bcl_matrix_apply(const bcl_matrix* m, const bcl_series* f, bcl_series** out) {
  return guarded([&] { emit(out, deref(m).value.apply(deref(f).value)); });
}

bcl_status bcl_matrix_to_csv(const bcl_matrix* m, char** out) {
  return guarded([&] { emit(out, bcl::io::matrix_to_csv(deref(m).value)); });
}

bcl_status bcl_truncated_spectrum(const bcl_matrix* m, double* re, double* im, size_t capacity) {
  return guarded([&] {
    const auto& mat = deref(m).value;
    if (!re || !im) throw NullArgument{};
    if (capacity < mat.size()) throw bcl::ContractViolation("spectrum buffer too small");
    const auto eig = bcl::truncated_spectrum(mat);
    for (size_t i = 0; i < eig.size(); ++i) {
      re[i] = eig[i].real();
      im[i] = eig[i].imag();
    }
  });
}

bcl_status bcl_eigenfunction_psi(const bcl_symbol* s, int n, size_t order, bcl_series** out) {
  return guarded([&] { emit(out, bcl::eigenfunction_psi(deref(s).value, n, order)); });
}

bcl_status bcl_eigenvector(const bcl_symbol* s, int n, size_t order, bcl_series** out) {
  return guarded([&] { emit(out, bcl::eigenvector(deref(s).value, n, order)); });
}

bcl_status bcl_point_spectrum_json(const bcl_symbol* s, double alpha, size_t count, char** out) {
  return guarded([&] {
    emit(out, bcl::io::to_json(bcl::point_spectrum(deref(s).value, alpha), count).dump());
  });
}

bcl_status bcl_approximate_eigen_probe(const bcl_symbol* s, int n, double alpha,
                                       const bcl_grid* g, size_t order, double* out) {
  return guarded([&] {
    out_ref(out) = bcl::approximate_eigen_probe(deref(s).value, n, bcl::BlochParams(alpha),
                                                deref(g).value, order);
  });
}

bcl_status bcl_classify(double alpha, double beta, unsigned* flags, char** json) {
  return guarded([&] {
    const auto c = bcl::classify(alpha, beta);
    unsigned bits = 0;
    for (auto v : c.verdicts) {
      switch (v) {
        case bcl::Verdict::Bounded: bits |= BCL_VERDICT_BOUNDED; break;
        case bcl::Verdict::Unbounded: bits |= BCL_VERDICT_UNBOUNDED; break;
        case bcl::Verdict::Compact: bits |= BCL_VERDICT_COMPACT; break;
        case bcl::Verdict::EssentialNormZero: bits |= BCL_VERDICT_ESSENTIAL_NORM_ZERO; break;
        case bcl::Verdict::NotCovered: bits |= BCL_VERDICT_NOT_COVERED; break;
      }
    }
    if (flags) *flags = bits;
    if (json) *json = dup_string(bcl::io::to_json(c).dump());
  });
}

bcl_status bcl_bound_constant(double alpha, double beta, double* value, int* at_boundary) {
  return guarded([&] {
    const auto b = bcl::bound_constant(alpha, beta);
    out_ref(value) = b.value;
    if (at_boundary) *at_boundary = b.attained_at_boundary ? 1 : 0;
  });
}

bcl_status bcl_counterexample_probe_json(double alpha, double beta, bcl_counterexample which,
                                         const double* t, size_t count, char** out) {
  return guarded([&] {
    bcl::Counterexample ex;
    switch (which) {
      case BCL_EX26: ex = bcl::Counterexample::Ex26; break;
      case BCL_EX27: ex = bcl::Counterexample::Ex27; break;
      case BCL_EX28: ex = bcl::Counterexample::Ex28; break;
      default: throw bcl::ContractViolation("unknown counterexample");
    }
    const std::vector<double> ts =
        t ? std::vector<double>(t, t + count) : bcl::default_probe_abscissae();
    emit(out, bcl::io::to_json(bcl::counterexample_probe(alpha, beta, ex, ts)).dump());
  });
}

bcl_status bcl_one_minus_power_bound(long long n, double* out) {
  return guarded([&] { out_ref(out) = bcl::one_minus_power_bound(n); });
}

bcl_status bcl_compactness_probe_json(const bcl_symbol* s, double alpha, bcl_family_kind kind,
                                      int m_max, const bcl_grid* g, size_t order, char** out) {
  return guarded([&] {
    const bcl::BlochParams p(alpha);
    const auto k = kind == BCL_FAMILY_DILATION ? bcl::NullFamilyKind::Dilation
                                               : bcl::NullFamilyKind::Monomial;
    const auto fam = bcl::null_family(k, m_max, p, deref(g).value, order);
    const auto rep = bcl::compactness_probe(deref(s).value, p, fam, deref(g).value);
    auto j = bcl::io::trend_to_json(rep, false);
    j["family"] = bcl::io::to_json(fam);
    emit(out, j.dump());
  });
}

bcl_status bcl_essential_norm_probe_json(const bcl_symbol* s, double alpha,
                                         const double* dilations, size_t count,
                                         const bcl_grid* g, size_t order, char** out) {
  return guarded([&] {
    if (!dilations) throw NullArgument{};
    const bcl::BlochParams p(alpha);
    const auto fam = bcl::default_test_family(p, deref(g).value, order);
    const std::vector<double> d(dilations, dilations + count);
    const auto rep = bcl::essential_norm_probe(deref(s).value, p, d, fam, deref(g).value);
    emit(out, bcl::io::trend_to_json(rep, true).dump());
  });
}

}  // extern "C"
