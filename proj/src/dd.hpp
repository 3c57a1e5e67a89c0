#ifndef EXPSUM_DD_HPP
#define EXPSUM_DD_HPP

#include <cmath>

#include "types.hpp"

// Double-double arithmetic: an unevaluated sum hi + lo of two doubles giving
// roughly 31 significant digits.  Used where a plain double would lose
// accuracy to cancellation or to n-fold amplification of rounding error:
// the exponent n*phi(z) of the scaled exponential, and the final polishing
// of oracle zeros at large n.  Only the operations actually needed are
// implemented.

namespace expsum {

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  DD() = default;
  DD(double h) : hi(h), lo(0.0) {}
  DD(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

// Error-free transforms.
inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return DD(s, err);
}

inline DD quick_two_sum(double a, double b) {  // requires |a| >= |b|
  double s = a + b;
  return DD(s, b - (s - a));
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  return DD(p, std::fma(a, b, -p));
}

inline DD dd_add(const DD& a, const DD& b) {
  DD s = two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  return quick_two_sum(s.hi, lo);
}

inline DD dd_add(const DD& a, double b) {
  DD s = two_sum(a.hi, b);
  return quick_two_sum(s.hi, s.lo + a.lo);
}

inline DD dd_neg(const DD& a) { return DD(-a.hi, -a.lo); }
inline DD dd_sub(const DD& a, const DD& b) { return dd_add(a, dd_neg(b)); }
inline DD dd_sub(const DD& a, double b) { return dd_add(a, -b); }

inline DD dd_mul(const DD& a, const DD& b) {
  DD p = two_prod(a.hi, b.hi);
  double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, lo);
}

inline DD dd_mul(const DD& a, double b) {
  DD p = two_prod(a.hi, b);
  return quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline DD dd_div(const DD& a, const DD& b) {
  double q1 = a.hi / b.hi;
  DD r = dd_sub(a, dd_mul(b, q1));
  double q2 = r.hi / b.hi;
  r = dd_sub(r, dd_mul(b, q2));
  double q3 = r.hi / b.hi;
  DD q = quick_two_sum(q1, q2);
  return dd_add(q, q3);
}

inline DD operator+(const DD& a, const DD& b) { return dd_add(a, b); }
inline DD operator-(const DD& a, const DD& b) { return dd_sub(a, b); }
inline DD operator*(const DD& a, const DD& b) { return dd_mul(a, b); }
inline DD operator/(const DD& a, const DD& b) { return dd_div(a, b); }
inline DD operator-(const DD& a) { return dd_neg(a); }

// log(x) for real x > 0, accurate to ~1e-16 absolute (not full dd):
// one correction step r += x*exp(-r) - 1 removes the ulp(r)-sized error of
// the double log, which matters once the result is multiplied by large n.
inline DD dd_log_refined(double x) {
  double r = std::log(x);
  double c = std::fma(x, std::exp(-r), -1.0);  // x*e^{-r} - 1 = (ln x - r) + O(err^2)
  return quick_two_sum(r, c);
}

// Complex double-double, component-wise.
struct CDD {
  DD re, im;

  CDD() = default;
  CDD(const DD& r, const DD& i) : re(r), im(i) {}
  CDD(double r, double i = 0.0) : re(r), im(i) {}
  explicit CDD(const Cplx& z) : re(z.real()), im(z.imag()) {}

  Cplx to_cplx() const { return Cplx(re.to_double(), im.to_double()); }
};

inline CDD cdd_add(const CDD& a, const CDD& b) { return CDD(a.re + b.re, a.im + b.im); }
inline CDD cdd_sub(const CDD& a, const CDD& b) { return CDD(a.re - b.re, a.im - b.im); }

inline CDD cdd_mul(const CDD& a, const CDD& b) {
  return CDD(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

inline CDD cdd_div(const CDD& a, const CDD& b) {
  DD denom = b.re * b.re + b.im * b.im;
  return CDD((a.re * b.re + a.im * b.im) / denom, (a.im * b.re - a.re * b.im) / denom);
}

inline CDD operator+(const CDD& a, const CDD& b) { return cdd_add(a, b); }
inline CDD operator-(const CDD& a, const CDD& b) { return cdd_sub(a, b); }
inline CDD operator*(const CDD& a, const CDD& b) { return cdd_mul(a, b); }
inline CDD operator/(const CDD& a, const CDD& b) { return cdd_div(a, b); }

inline double cdd_abs(const CDD& a) {
  return std::hypot(a.re.to_double(), a.im.to_double());
}

// exp of a complex exponent held in double-double.  The real part uses
// e^{hi}*(1+lo); the imaginary part is reduced mod 2*pi in dd before the
// final double-precision cis, so the phase stays accurate when |Im w| ~ n.
inline Cplx exp_cdd(const CDD& w) {
  static const DD kTwoPiDD(6.283185307179586, 2.4492935982947064e-16);
  double k = std::round(w.im.to_double() / kTwoPi);
  DD theta = w.im - dd_mul(kTwoPiDD, k);
  double mag = std::exp(w.re.hi) * (1.0 + w.re.lo);
  double t = theta.to_double();
  return Cplx(mag * std::cos(t), mag * std::sin(t));
}

}  // namespace expsum

#endif  // EXPSUM_DD_HPP
