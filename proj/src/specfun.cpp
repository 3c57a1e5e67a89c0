#include "specfun.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

namespace expsum {

namespace {

// ---------------------------------------------------------------------------
// v(zeta) = e^{zeta^2} erfc(zeta)
// ---------------------------------------------------------------------------

// 1/Gamma(n/2 + 1) for the Maclaurin series v = sum (-zeta)^n / Gamma(n/2+1).
const std::vector<double>& inv_gamma_half_table() {
  static std::vector<double> t = [] {
    std::vector<double> v(100);
    for (int n = 0; n < 100; ++n) v[n] = 1.0 / std::tgamma(0.5 * n + 1.0);
    return v;
  }();
  return t;
}

Cplx v_maclaurin(const Cplx& zeta) {
  const std::vector<double>& inv = inv_gamma_half_table();
  Cplx acc(0, 0), pw(1, 0);
  Cplx neg = -zeta;
  for (std::size_t n = 0; n < inv.size(); ++n) {
    Cplx term = pw * inv[n];
    acc += term;
    if (n > 8 && std::abs(term) < 1e-18 * std::abs(acc)) break;
    pw *= neg;
  }
  return acc;
}

// Laplace continued fraction, reliable in the right half plane at large
// modulus: v = (1/sqrt(pi)) / (zeta + (1/2)/(zeta + 1/(zeta + (3/2)/(...)))).
Cplx v_continued_fraction(const Cplx& zeta) {
  Cplx t = zeta;
  for (int n = 48; n >= 1; --n) t = zeta + (0.5 * n) / t;
  return 1.0 / (kSqrtPi * t);
}

// Large-modulus asymptotic series with adaptive truncation; used near the
// imaginary axis where the continued fraction degrades.  The omitted
// reflected term is below e^{-|zeta|^2} relative, invisible at |zeta| >= 6.
Cplx v_asymptotic(const Cplx& zeta) {
  Cplx inv2z2 = 1.0 / (2.0 * zeta * zeta);
  Cplx term(1, 0), acc(1, 0);
  double last = 1.0;
  for (int j = 1; j < 60; ++j) {
    term *= -static_cast<double>(2 * j - 1) * inv2z2;
    double mag = std::abs(term);
    if (mag >= last) break;  // optimal truncation reached
    acc += term;
    if (mag < 1e-18) break;
    last = mag;
  }
  return acc / (kSqrtPi * zeta);
}

// Real-axis anchor value for the intermediate band.
double v_real_axis(double x) {
  if (x <= 2.0) return v_maclaurin(Cplx(x, 0)).real();
  return std::exp(x * x) * std::erfc(x);
}

// Taylor continuation of v from zeta0 (value v0) to zeta0 + step, using the
// derivative recursion v' = 2 zeta v - 2/sqrt(pi),
// v^{(m+1)} = 2 (zeta v^{(m)} + m v^{(m-1)}).
Cplx v_taylor_step(const Cplx& zeta0, const Cplx& v0, const Cplx& step) {
  const int kTerms = 40;
  Cplx d_prev = v0;
  Cplx d_cur = 2.0 * zeta0 * v0 - 2.0 / kSqrtPi;
  Cplx acc = v0 + d_cur * step;
  Cplx hpow = step;
  double fact = 1.0;
  for (int m = 1; m < kTerms; ++m) {
    Cplx d_next = 2.0 * (zeta0 * d_cur + static_cast<double>(m) * d_prev);
    d_prev = d_cur;
    d_cur = d_next;
    hpow *= step;
    fact *= (m + 1);
    acc += d_cur * hpow / fact;
  }
  return acc;
}

// v in the closed first quadrant.
Cplx v_first_quadrant(const Cplx& zeta) {
  double x = zeta.real(), y = zeta.imag();
  double mod = std::abs(zeta);
  if (mod <= 2.0) return v_maclaurin(zeta);
  if (mod >= 6.0) {
    return (x >= 1.0) ? v_continued_fraction(zeta) : v_asymptotic(zeta);
  }
  // Intermediate band: anchor on the real axis below the point, then climb
  // vertically.  Upward is the stable direction (the homogeneous solution
  // e^{zeta^2} decays as Im zeta grows).
  Cplx cur(x, 0.0);
  Cplx val(v_real_axis(x), 0.0);
  double remaining = y;
  while (remaining > 0.0) {
    double h = std::min(0.3, remaining);
    val = v_taylor_step(cur, val, Cplx(0, h));
    cur += Cplx(0, h);
    remaining -= h;
  }
  return val;
}

}  // namespace

Cplx scaled_erfc(const Cplx& zeta) {
  if (zeta.imag() < 0.0) return std::conj(scaled_erfc(std::conj(zeta)));
  if (zeta.real() < 0.0) {
    // v(zeta) = 2 e^{zeta^2} - v(-zeta); the reflected argument lands in the
    // fourth quadrant and is handled by the conjugation above.
    return 2.0 * std::exp(zeta * zeta) - scaled_erfc(-zeta);
  }
  return v_first_quadrant(zeta);
}

Cplx erfc_full(const Cplx& zeta) {
  return std::exp(-zeta * zeta) * scaled_erfc(zeta);
}

Cplx h_side(const Cplx& zeta, int side) {
  if (side >= 0) return 0.5 * scaled_erfc(Cplx(0, -1) * zeta);
  return -0.5 * scaled_erfc(Cplx(0, 1) * zeta);
}

Cplx h_transform(const Cplx& zeta) {
  if (zeta.imag() == 0.0) {
    throw DomainError("h_transform: argument on the real axis (jump locus); use h_side");
  }
  return h_side(zeta, zeta.imag() > 0.0 ? +1 : -1);
}

// ---------------------------------------------------------------------------
// Zeros of erfc in the second quadrant
// ---------------------------------------------------------------------------

namespace {

// f(w) = w^2 - ln(v(-w)/2) + 2 pi i k; at the k-th zero f vanishes with the
// principal log, and at any other zero |f| >= ~2 pi, so a small residual
// certifies the index as well as the location.
Cplx zero_equation(const Cplx& w, int k) {
  return w * w - std::log(0.5 * scaled_erfc(-w)) + Cplx(0, kTwoPi * k);
}

Cplx zero_equation_derivative(const Cplx& w) {
  // f'(w) = 2w + v'(-w)/v(-w) with v' = 2 zeta v - 2/sqrt(pi) collapses to
  // -2/(sqrt(pi) v(-w)).
  return -2.0 / (kSqrtPi * scaled_erfc(-w));
}

Cplx initial_guess(int k) {
  Cplx w = std::sqrt(kTwoPi * k) * Cplx(-1.0 / kSqrt2, 1.0 / kSqrt2);
  for (int i = 0; i < 3; ++i) {
    // One step of w = -sqrt(-2 pi i k - ln(-2 sqrt(pi) w)) sharpens the
    // modulus estimate with the log correction.
    w = -std::sqrt(Cplx(0, -kTwoPi * k) - std::log(-2.0 * kSqrtPi * w));
  }
  return w;
}

// Argument-principle certification: winding number of erfc around a square
// box centered at w; must be exactly one.
bool winding_is_one(const Cplx& w, double half_width) {
  const int kPerEdge = 256;
  Cplx corners[5] = {w + Cplx(-half_width, -half_width), w + Cplx(half_width, -half_width),
                     w + Cplx(half_width, half_width), w + Cplx(-half_width, half_width),
                     w + Cplx(-half_width, -half_width)};
  double total = 0.0;
  Cplx prev = erfc_full(corners[0]);
  for (int e = 0; e < 4; ++e) {
    for (int i = 1; i <= kPerEdge; ++i) {
      Cplx p = corners[e] + (corners[e + 1] - corners[e]) * (static_cast<double>(i) / kPerEdge);
      Cplx cur = erfc_full(p);
      double dphi = std::arg(cur / prev);
      if (std::abs(dphi) > 2.5) return false;  // sampling too coarse to trust
      total += dphi;
      prev = cur;
    }
  }
  return std::abs(total - kTwoPi) < 0.5;
}

std::vector<ErfcZero>& zero_cache() {
  static std::vector<ErfcZero> cache;
  return cache;
}
std::mutex& zero_cache_mutex() {
  static std::mutex m;
  return m;
}

ErfcZero compute_zero(int k) {
  Cplx w = initial_guess(k);
  bool converged = false;
  for (int it = 0; it < 100; ++it) {
    Cplx f = zero_equation(w, k);
    Cplx step = f / zero_equation_derivative(w);
    w -= step;
    if (std::abs(step) < 1e-15 * (1.0 + std::abs(w))) { converged = true; break; }
  }
  double residual = std::abs(erfc_full(w));
  double index_resid = std::abs(zero_equation(w, k));
  if (!converged || residual > 1e-12 || index_resid > 1e-8) {
    throw ConvergenceError("erfc_zero: Newton failed for k=" + std::to_string(k) +
                           " (|erfc|=" + std::to_string(residual) + ")");
  }
  if (w.real() >= 0.0 || w.imag() <= 0.0) {
    throw ConvergenceError("erfc_zero: iterate left the second quadrant, k=" +
                           std::to_string(k));
  }
  // Box small enough to exclude the neighbors, whose distance is ~pi/|w|.
  double half_width = std::min(0.5, 0.45 * kPi / std::abs(w));
  if (!winding_is_one(w, half_width)) {
    throw ConvergenceError("erfc_zero: winding certification failed for k=" +
                           std::to_string(k));
  }
  return {k, w, residual};
}

}  // namespace

ErfcZero erfc_zero(int k) {
  if (k < 1) throw DomainError("erfc_zero: k must be >= 1");
  std::lock_guard<std::mutex> lock(zero_cache_mutex());
  std::vector<ErfcZero>& cache = zero_cache();
  while (static_cast<int>(cache.size()) < k) {
    int next = static_cast<int>(cache.size()) + 1;
    ErfcZero z = compute_zero(next);
    if (!cache.empty() && std::abs(z.value) <= std::abs(cache.back().value)) {
      throw ConvergenceError("erfc_zero: modulus ordering violated at k=" +
                             std::to_string(next));
    }
    cache.push_back(z);
  }
  return cache[k - 1];
}

double log_relation_residual(const Cplx& w, int k) {
  Cplx e = w * w - std::log(0.5 * scaled_erfc(-w)) + Cplx(0, kTwoPi * k);
  double wraps = std::round(e.imag() / kTwoPi);
  return std::abs(e - Cplx(0, kTwoPi * wraps));
}

double log_relation_check(int k) {
  return log_relation_residual(erfc_zero(k).value, k);
}

}  // namespace expsum
