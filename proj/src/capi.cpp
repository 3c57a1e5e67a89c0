#include "expsum/expsum.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "cauchy.hpp"
#include "contour.hpp"
#include "conformal.hpp"
#include "errors.hpp"
#include "partial_sum.hpp"
#include "phase.hpp"
#include "specfun.hpp"
#include "threading.hpp"
#include "types.hpp"
#include "zeros.hpp"

// Thin exception-to-status translation layer over the C++ core.  All
// library state reachable from here is immutable or thread-local, so the
// exported functions are safe to call concurrently.

namespace {

using expsum::Cplx;

// The C enums are declared in the same order as the C++ ones; keep that in
// sync at compile time.
static_assert(EX_DOMAIN_ERROR == int(expsum::Status::domain_error));
static_assert(EX_USAGE_ERROR == int(expsum::Status::usage_error));
static_assert(EX_ZEROS_ORACLE == int(expsum::ZeroMethod::oracle));
static_assert(EX_ZEROS_NEWTON == int(expsum::ZeroMethod::newton_solve));

thread_local std::string g_last_error;

ex_status fail(ex_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <typename Fn>
ex_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return EX_OK;
  } catch (const expsum::Error& e) {
    return fail(static_cast<ex_status>(int(e.status())), e.what());
  } catch (const std::exception& e) {
    return fail(EX_DOMAIN_ERROR, std::string("unexpected: ") + e.what());
  }
}

Cplx to_cplx(ex_complex z) { return Cplx(z.re, z.im); }
ex_complex from_cplx(const Cplx& z) { return ex_complex{z.real(), z.imag()}; }

// Radius of the default integration contour at polar angle theta: the
// descent arc theta/sin(theta) inside |theta| <= pi/2, the closing circle
// |z| = pi/2 beyond.
double contour_radius(double theta) {
  const double a = std::abs(theta);
  if (a >= expsum::kPi / 2.0) return expsum::kPi / 2.0;
  if (a < 1e-8) return 1.0 + a * a / 6.0;
  return theta / std::sin(theta);
}

bool contour_interior(const Cplx& z, double* radial_gap) {
  const double rho = contour_radius(std::arg(z));
  if (radial_gap) *radial_gap = std::abs(std::abs(z) - rho);
  return std::abs(z) < rho;
}

expsum::ZeroEstimate alpha_estimate(int n, int k, expsum::ZeroMethod method) {
  Cplx value;
  switch (method) {
    case expsum::ZeroMethod::szego_alpha:
      value = expsum::alpha_szego(n, k);
      break;
    case expsum::ZeroMethod::refined_alpha:
      value = expsum::alpha_refined(n, k);
      break;
    default:
      value = expsum::alpha_critical(n, k);
      break;
  }
  expsum::ZeroEstimate e;
  e.k = k;
  e.n = n;
  e.value = value;
  e.method = method;
  e.order_r = 0;
  e.residual = std::abs(expsum::partial_sum_scaled(n, value).value);
  e.error_bound = 0.0;  // equation solutions carry no distance certificate
  return e;
}

// Largest prefix of erfc-zero indices whose conformal preimage stays
// inside the trust radius.
int critical_alpha_limit(int n) {
  const double cap = expsum::kLambdaTrustRadius * std::sqrt(double(n));
  int k = 0;
  while (k + 1 <= n / 2 &&
         std::abs(expsum::erfc_zero(k + 1).value) <= cap) {
    ++k;
  }
  return k;
}

}  // namespace

struct ex_zero_list {
  std::vector<expsum::ZeroEstimate> items;
};

extern "C" {

const char* ex_status_name(ex_status s) {
  return expsum::status_name(static_cast<expsum::Status>(int(s)));
}

const char* ex_last_error(void) { return g_last_error.c_str(); }

const char* ex_version(void) { return "1.0.0"; }

void ex_set_max_threads(int n) { expsum::set_max_threads(n); }

ex_status ex_phase_eval(ex_complex z, int continued_branch, ex_complex* phi,
                        ex_complex* dphi) {
  return guarded([&] {
    const auto branch = continued_branch ? expsum::LogBranch::tilde
                                         : expsum::LogBranch::standard;
    if (phi) *phi = from_cplx(expsum::phi(to_cplx(z), branch));
    if (dphi) *dphi = from_cplx(expsum::phi_prime(to_cplx(z)));
  });
}

ex_status ex_szego_point(double theta, ex_curve_sample* out) {
  if (!out) return fail(EX_USAGE_ERROR, "ex_szego_point: out is NULL");
  return guarded([&] {
    const expsum::CurveSample s = expsum::szego_point(theta);
    *out = ex_curve_sample{s.theta, s.r, from_cplx(s.z)};
  });
}

ex_status ex_descent_point(double theta, ex_curve_sample* out) {
  if (!out) return fail(EX_USAGE_ERROR, "ex_descent_point: out is NULL");
  return guarded([&] {
    const expsum::CurveSample s = expsum::steepest_descent_point(theta);
    *out = ex_curve_sample{s.theta, s.r, from_cplx(s.z)};
  });
}

ex_status ex_szego_distance(ex_complex z, double* out) {
  if (!out) return fail(EX_USAGE_ERROR, "ex_szego_distance: out is NULL");
  return guarded([&] { *out = expsum::szego_distance(to_cplx(z)); });
}

ex_status ex_erfc_zero(int k, ex_complex* w, double* residual) {
  if (!w) return fail(EX_USAGE_ERROR, "ex_erfc_zero: w is NULL");
  return guarded([&] {
    const expsum::ErfcZero z = expsum::erfc_zero(k);
    *w = from_cplx(z.value);
    if (residual) *residual = z.residual;
  });
}

ex_status ex_partial_sum(int n, ex_complex z, ex_complex* value,
                         ex_complex* deriv) {
  return guarded([&] {
    const expsum::PartialSumEval e = expsum::partial_sum_scaled(n, to_cplx(z));
    if (value) *value = from_cplx(e.value);
    if (deriv) *deriv = from_cplx(e.deriv);
  });
}

ex_status ex_stirling(int n, ex_complex* quadrature_value, double* check_value,
                      double* discrepancy) {
  return guarded([&] {
    const expsum::EvalReport r = expsum::stirling_integral(n);
    if (quadrature_value) *quadrature_value = from_cplx(r.value_primary);
    if (check_value) *check_value = r.value_check.real();
    if (discrepancy) *discrepancy = r.abs_discrepancy;
  });
}

ex_status ex_fn_eval(int n, ex_complex zc, ex_fn_method method, int order_r,
                     ex_complex* value, double* error_estimate) {
  if (!value) return fail(EX_USAGE_ERROR, "ex_fn_eval: value is NULL");
  return guarded([&] {
    const Cplx z = to_cplx(zc);
    Cplx v;
    double est = 0.0;
    switch (method) {
      case EX_FN_QUADRATURE: {
        const expsum::FnValue fv =
            expsum::fn_quadrature(n, z, expsum::make_admissible_contour());
        v = fv.value;
        est = fv.error_estimate;
        break;
      }
      case EX_FN_RESIDUE: {
        double gap = 0.0;
        const bool inside = contour_interior(z, &gap);
        if (gap < 1e-9) {
          throw expsum::ProximityError(
              "ex_fn_eval: z lies on the integration contour; the two-sided "
              "limits differ");
        }
        v = expsum::fn_residue(
            n, z, inside ? expsum::Side::interior : expsum::Side::exterior);
        break;
      }
      case EX_FN_PARAMETRIX: {
        v = expsum::parametrix(n, z);
        // Scale of the first omitted correction.
        est = std::abs(expsum::fn_expansion_local(n, z, 1) - v);
        break;
      }
      case EX_FN_LOCAL: {
        v = expsum::fn_expansion_local(n, z, order_r);
        est = std::pow(double(n), -1.5);
        break;
      }
      case EX_FN_OUTER: {
        v = expsum::fn_expansion_outer(n, z, order_r);
        est = std::abs(v) * std::pow(1.0 / (n * std::norm(z - 1.0)), order_r);
        break;
      }
      default:
        throw expsum::UsageError("ex_fn_eval: unknown method code");
    }
    *value = from_cplx(v);
    if (error_estimate) *error_estimate = est;
  });
}

const char* ex_zero_method_name(ex_zero_method m) {
  if (m < EX_ZEROS_ORACLE || m > EX_ZEROS_NEWTON) return nullptr;
  return expsum::zero_method_name(static_cast<expsum::ZeroMethod>(int(m)));
}

int ex_zero_method_parse(const char* name) {
  if (!name) return -1;
  expsum::ZeroMethod m;
  if (!expsum::zero_method_from_name(name, &m)) return -1;
  return int(m);
}

ex_status ex_zeros_compute(int n, int k_lo, int k_hi, ex_zero_method method,
                           int order_r, ex_zero_list** out) {
  if (!out) return fail(EX_USAGE_ERROR, "ex_zeros_compute: out is NULL");
  *out = nullptr;
  return guarded([&] {
    if (method < EX_ZEROS_ORACLE || method > EX_ZEROS_NEWTON) {
      throw expsum::UsageError("ex_zeros_compute: unknown method code");
    }
    const auto m = static_cast<expsum::ZeroMethod>(int(method));
    if (n < 2) throw expsum::DomainError("ex_zeros_compute: n must be >= 2");

    const bool full_range = (m == expsum::ZeroMethod::oracle ||
                             m == expsum::ZeroMethod::newton_solve);
    if (k_lo == 0) {
      k_lo = 1;
      if (full_range) {
        k_hi = n - 1;
      } else if (m == expsum::ZeroMethod::critical_alpha) {
        k_hi = critical_alpha_limit(n);
        if (k_hi == 0) {
          throw expsum::DomainError(
              "ex_zeros_compute: no erfc-zero index inside the conformal "
              "trust radius at this n");
        }
      } else {
        k_hi = n / 2;
      }
    }
    if (k_lo < 1 || k_hi < k_lo) {
      throw expsum::DomainError("ex_zeros_compute: need 1 <= k_lo <= k_hi");
    }

    auto list = std::make_unique<ex_zero_list>();
    const int count = k_hi - k_lo + 1;

    if (m == expsum::ZeroMethod::oracle) {
      const auto all = expsum::oracle_zeros(n);
      if (k_hi > n - 1) {
        throw expsum::DomainError("ex_zeros_compute: k_hi exceeds n - 1");
      }
      list->items.assign(all.begin() + (k_lo - 1), all.begin() + k_hi);
    } else if (m == expsum::ZeroMethod::newton_solve && k_lo == 1 &&
               k_hi == n - 1) {
      list->items = expsum::newton_zero_set(n);
    } else {
      list->items.resize(count);
      expsum::parallel_for(std::size_t(count), [&](std::size_t i) {
        const int k = k_lo + int(i);
        switch (m) {
          case expsum::ZeroMethod::newton_solve:
            list->items[i] = expsum::newton_solve(n, k);
            break;
          case expsum::ZeroMethod::curve_expansion:
            list->items[i] = expsum::curve_expansion(n, k, order_r);
            break;
          case expsum::ZeroMethod::saddle_expansion:
            list->items[i] = expsum::saddle_expansion(n, k, order_r);
            break;
          default:
            list->items[i] = alpha_estimate(n, k, m);
            break;
        }
      });
    }
    *out = list.release();
  });
}

size_t ex_zero_list_size(const ex_zero_list* list) {
  return list ? list->items.size() : 0;
}

ex_status ex_zero_list_get(const ex_zero_list* list, size_t index,
                           ex_zero* out) {
  if (!list || !out) return fail(EX_USAGE_ERROR, "ex_zero_list_get: NULL arg");
  if (index >= list->items.size()) {
    return fail(EX_USAGE_ERROR, "ex_zero_list_get: index out of range");
  }
  const expsum::ZeroEstimate& e = list->items[index];
  *out = ex_zero{e.k,          e.n,          from_cplx(e.value),
                 int(e.method), e.order_r,   e.residual,
                 e.error_bound};
  g_last_error.clear();
  return EX_OK;
}

void ex_zero_list_free(ex_zero_list* list) { delete list; }

ex_status ex_match_zeros(const ex_zero_list* predicted,
                         const ex_zero_list* reference, int* to_reference,
                         double* distance, double* max_distance,
                         double* min_gap) {
  if (!predicted || !reference) {
    return fail(EX_USAGE_ERROR, "ex_match_zeros: NULL list");
  }
  return guarded([&] {
    const expsum::ZeroMatching m =
        expsum::match_zeros(predicted->items, reference->items);
    for (std::size_t i = 0; i < predicted->items.size(); ++i) {
      if (to_reference) to_reference[i] = m.to_oracle[i];
      if (distance) distance[i] = m.distance[i];
    }
    if (max_distance) *max_distance = m.max_distance;
    if (min_gap) *min_gap = m.oracle_min_gap;
  });
}

}  // extern "C"
