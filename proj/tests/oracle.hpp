#ifndef EXPSUM_TESTS_ORACLE_HPP
#define EXPSUM_TESTS_ORACLE_HPP

// Independent long-double quadrature oracles, used only by tests to
// cross-check library values.  Deliberately shares no code with the
// library: plain tanh-sinh integration of defining integral
// representations.

#include <cmath>
#include <complex>

#include "../src/dd.hpp"

namespace oracle {

using CLD = std::complex<long double>;

// Tanh-sinh quadrature of f over the finite interval [a, b].  Smooth
// integrands only; converges to long-double roundoff by level ~8.
template <typename F>
CLD tanh_sinh(F&& f, long double a, long double b) {
  const long double kPiHalf = 1.57079632679489661923L;
  const long double mid = 0.5L * (a + b);
  const long double half = 0.5L * (b - a);
  auto node = [&](long double u, CLD& val, long double& w) -> bool {
    long double sh = kPiHalf * std::sinh(u);
    if (std::fabs(sh) > 300.0L) return false;
    long double ch = std::cosh(sh);
    w = kPiHalf * std::cosh(u) / (ch * ch);
    if (w < 1e-24L) return false;
    val = f(mid + half * std::tanh(sh));
    return true;
  };
  long double h = 1.0L;
  CLD val;
  long double w;
  node(0.0L, val, w);
  CLD sum = val * w;  // running sum of w*f over all nodes at spacing h
  for (long double u = h; ; u += h) {
    bool okp = node(u, val, w);
    if (okp) sum += val * w;
    bool okm = node(-u, val, w);
    if (okm) sum += val * w;
    if (!okp && !okm) break;
  }
  CLD estimate = sum * (h * half);
  for (int level = 1; level <= 12; ++level) {
    h *= 0.5L;
    for (int k = 1; k < (1 << 22); k += 2) {  // odd multiples are new nodes
      bool okp = node(k * h, val, w);
      if (okp) sum += val * w;
      bool okm = node(-k * h, val, w);
      if (okm) sum += val * w;
      if (!okp && !okm) break;
    }
    CLD next = sum * (h * half);
    if (level >= 5 && std::abs(next - estimate) <= 1e-18L * (1.0L + std::abs(next))) {
      return next;
    }
    estimate = next;
  }
  return estimate;
}

// v(zeta) = e^{zeta^2} erfc(zeta) = (2/sqrt(pi)) Int_0^inf e^{-t^2-2 zeta t} dt,
// valid for Re zeta >= 0; integrand below 1e-62 past t = 12.
inline CLD v_integral(CLD zeta) {
  auto f = [&](long double t) -> CLD {
    return std::exp(CLD(-t * t, 0.0L) - 2.0L * zeta * t);
  };
  const long double kTwoOverSqrtPi = 1.12837916709551257390L;
  return kTwoOverSqrtPi * tanh_sinh(f, 0.0L, 12.0L);
}

// Same function continued to Re zeta < 0 through the exact reflection
// v(zeta) = 2 e^{zeta^2} - v(-zeta).
inline CLD v_any(CLD zeta) {
  if (zeta.real() >= 0.0L) return v_integral(zeta);
  return 2.0L * std::exp(zeta * zeta) - v_integral(-zeta);
}

// Gaussian Cauchy transform h(zeta) = (1/(2 pi i)) Int_R e^{-u^2}/(u-zeta) du,
// truncated to [-12, 12]; keep zeta at distance >= ~0.3 from the real axis.
inline CLD h_integral(CLD zeta) {
  auto f = [&](long double u) -> CLD {
    return std::exp(CLD(-u * u, 0.0L)) / (CLD(u, 0.0L) - zeta);
  };
  const long double kTwoPi = 6.28318530717958647692L;
  return tanh_sinh(f, -12.0L, 12.0L) / CLD(0.0L, kTwoPi);
}

// Reference for the scaled partial sum (e z)^{-n} p_{n-1}(n z): direct
// linear-space summation in double-double (~31 digits), with the scaling
// factor raised by binary exponentiation instead of logs.  Valid while the
// largest term e^{n phi(|z|)} stays below ~1e300.
inline expsum::CDD cdd_powi(expsum::CDD base, int e) {
  expsum::CDD r(1.0, 0.0);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

inline expsum::Cplx partial_sum_reference(int n, const expsum::Cplx& z) {
  using expsum::CDD;
  using expsum::DD;
  static const DD kE(2.718281828459045091e+00, 1.445646891729250158e-16);
  const CDD nz = CDD(z) * CDD(static_cast<double>(n));
  CDD term(1.0, 0.0), sum(1.0, 0.0);
  for (int k = 1; k < n; ++k) {
    term = term * nz / CDD(DD(static_cast<double>(k)), DD(0.0));
    sum = sum + term;
  }
  const CDD inv_ez = CDD(DD(1.0), DD(0.0)) / (CDD(kE, DD(0.0)) * CDD(z));
  return (sum * cdd_powi(inv_ez, n)).to_cplx();
}

}  // namespace oracle

#endif  // EXPSUM_TESTS_ORACLE_HPP
