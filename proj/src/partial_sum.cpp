#include "partial_sum.hpp"

#include <cmath>
#include <vector>

namespace expsum {

namespace {

// n * phi(z) with the real part in double-double; phi(z) = z - 1 - ln z.
// The branch of ln is irrelevant here because e^{n phi} is single-valued
// for integer n.
CDD n_phi_cdd(int n, const Cplx& z) {
  DD re = dd_sub(DD(z.real() - 1.0), dd_log_refined(std::abs(z)));
  double im = z.imag() - std::arg(z);
  double nn = static_cast<double>(n);
  return CDD(dd_mul(re, nn), dd_mul(DD(im), nn));
}

// s(n) = ln n! - [n ln n - n + (1/2) ln(2 pi n)] ~ 1/(12 n); the Stirling
// tail series is used where it is below roundoff of the direct route.
double stirling_correction(int n) {
  if (n < 15) {
    return std::lgamma(n + 1.0) -
           (n * std::log(static_cast<double>(n)) - n + 0.5 * std::log(kTwoPi * n));
  }
  double x = 1.0 / static_cast<double>(n);
  double x2 = x * x;
  return x * (1.0 / 12 + x2 * (-1.0 / 360 + x2 * (1.0 / 1260 + x2 * (-1.0 / 1680 + x2 / 1188))));
}

bool use_complementary_route(int n, const Cplx& z) {
  double r = std::abs(z);
  if (r >= 1.0) return false;
  // phi(r) bounds the log of the peak term of the direct sum.
  return n * (r - 1.0 - std::log(r)) > 3.5;
}

// Direct route: S = sum_k exp(E_k), E_k = k ln(nz) - ln k! - n(1 + ln z),
// with exponents accumulated in double-double and the sum rescaled by the
// largest real part.
Cplx direct_sum(int n, const Cplx& z) {
  const double r = std::abs(z);
  const double th = std::arg(z);
  const DD ln_nz_re = dd_log_refined(n * r);
  const double nn = static_cast<double>(n);

  std::vector<CDD> expo(n);
  expo[0] = CDD(dd_mul(dd_add(dd_log_refined(r), 1.0), -nn), dd_mul(DD(th), -nn));
  for (int k = 1; k < n; ++k) {
    expo[k].re = expo[k - 1].re + ln_nz_re - dd_log_refined(static_cast<double>(k));
    expo[k].im = dd_add(expo[k - 1].im, th);
  }
  double peak = expo[0].re.hi;
  for (int k = 1; k < n; ++k) peak = std::max(peak, expo[k].re.hi);

  Cplx sum(0, 0);
  for (int k = 0; k < n; ++k) {
    CDD shifted(dd_sub(expo[k].re, peak), expo[k].im);
    if (shifted.re.hi < -46.0) continue;  // below 1e-20 of the peak term
    sum += exp_cdd(shifted);
  }
  return std::exp(peak) * sum;
}

// Tail factor V(z) = sum_{m>=0} (nz)^m / ((n+1)...(n+m)) of the
// complementary route; terms are strictly decreasing in modulus for |z| < 1.
Cplx tail_v(int n, const Cplx& z) {
  const Cplx nz = static_cast<double>(n) * z;
  Cplx term(1, 0), acc(1, 0);
  for (int m = 0; m < 200000; ++m) {
    term *= nz / static_cast<double>(n + m + 1);
    acc += term;
    if (std::abs(term) <= 1e-18 * (1.0 + std::abs(acc))) return acc;
  }
  throw ConvergenceError("tail_v: series did not converge (|z| too close to 1?)");
}

Cplx complementary_sum(int n, const Cplx& z) {
  Cplx big = exp_cdd(n_phi_cdd(n, z));
  double c = std::exp(-stirling_correction(n)) / std::sqrt(kTwoPi * n);
  return big - c * tail_v(n, z);
}

}  // namespace

PartialSumEval partial_sum_scaled(int n, const Cplx& z) {
  if (n < 1 || n > 2000) throw DomainError("partial_sum_scaled: n out of range [1, 2000]");
  if (z == Cplx(0, 0)) throw DomainError("partial_sum_scaled: z = 0");
  PartialSumEval out;
  out.value = use_complementary_route(n, z) ? complementary_sum(n, z) : direct_sum(n, z);
  double nn = static_cast<double>(n);
  out.deriv = nn * out.value * (1.0 - 1.0 / z) - nn * gn_exact(n) / z;
  return out;
}

Cplx partial_sum_value(int n, const Cplx& z) { return partial_sum_scaled(n, z).value; }

Cplx log_derivative(int n, const Cplx& z) {
  Cplx s = partial_sum_value(n, z);
  double nn = static_cast<double>(n);
  return nn * (1.0 - gn_exact(n) / (z * s));
}

Cplx interior_f(int n, const Cplx& z) {
  if (n < 1 || n > 2000) throw DomainError("interior_f: n out of range [1, 2000]");
  if (z == Cplx(0, 0)) throw DomainError("interior_f: z = 0");
  if (use_complementary_route(n, z)) {
    // e^{n phi} - S collapses to the tail term exactly; no cancellation.
    double c = std::exp(-stirling_correction(n)) / std::sqrt(kTwoPi * n);
    return c * tail_v(n, z);
  }
  return exp_cdd(n_phi_cdd(n, z)) - direct_sum(n, z);
}

double gn_exact(int n) {
  if (n < 1) throw DomainError("gn_exact: n must be >= 1");
  if (n > 1500) {
    // lgamma route, relative error ~1e-13; the dd product below would
    // overflow past e^{n/e}.
    return std::exp((n - 1.0) * std::log(static_cast<double>(n)) - n -
                    std::lgamma(static_cast<double>(n)));
  }
  static const DD kE(2.718281828459045091e+00, 1.445646891729250158e-16);
  const DD inv_e = dd_div(DD(1.0), kE);
  DD prod(1.0);
  const double nn = static_cast<double>(n);
  for (int j = 1; j < n; ++j) {
    // Interleaving each n/j with e^{-1} keeps partial products <= e^{n/e}.
    prod = dd_mul(prod, dd_mul(dd_div(DD(nn), DD(static_cast<double>(j))), inv_e));
  }
  prod = dd_mul(prod, inv_e);
  return prod.to_double();
}

double gn_two_term(int n) {
  if (n < 1) throw DomainError("gn_two_term: n must be >= 1");
  return (1.0 - 1.0 / (12.0 * n)) / std::sqrt(kTwoPi * n);
}

}  // namespace expsum
