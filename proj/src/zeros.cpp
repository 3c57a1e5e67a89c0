#include "zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "cauchy.hpp"
#include "conformal.hpp"
#include "contour.hpp"
#include "partial_sum.hpp"
#include "phase.hpp"
#include "specfun.hpp"
#include "threading.hpp"

namespace expsum {
namespace {

constexpr int kOracleMaxN = 500;
constexpr int kNewtonMaxN = 2000;
constexpr double kResidualTarget = 1e-12;

// Seed selection for the iterative solvers: the saddle series is the better
// predictor while k stays below ~n^{1/3} (where the two expansions trade
// places); beyond that the curve corrections win.
constexpr double kSeedSwitchC = 1.0;

// Fitted leading constants of the a-priori error bounds, frozen at ~2x the
// worst measured ratio against oracle_zeros over a sweep of 20 <= n <= 500
// and all upper-half k (see the module tests, which re-verify the bounds
// against the oracle).
constexpr double kCurveBoundC[3] = {0.30, 0.045, 0.006};  // r = 1, 2, 3
constexpr double kSaddleBoundC[3] = {6.0, 3.0, 1.5};      // r = 2, 3, 4

double residual_at(int n, const Cplx& z) {
  return std::abs(partial_sum_scaled(n, z).value);
}

// Index of a zero in the phase equation: Im phi~ sits within O(1/n) of
// -2 pi k / n at the k-th zero, so rounding recovers k exactly.
int k_index(int n, const Cplx& z) {
  return static_cast<int>(std::lround(-n * phi(z, LogBranch::tilde).imag() / kTwoPi));
}

void check_n_range(int n, int n_max, const char* where) {
  if (n < 2 || n > n_max) {
    std::ostringstream msg;
    msg << where << ": n = " << n << " outside [2, " << n_max << "]";
    throw DomainError(msg.str());
  }
}

void check_upper_k(int n, int k, const char* where) {
  if (k < 1 || 2 * k > n) {
    std::ostringstream msg;
    msg << where << ": k = " << k << " outside [1, n/2] for n = " << n;
    throw DomainError(msg.str());
  }
}

// y-argument of the curve corrections.  1 - alpha stays in the closed
// fourth quadrant along the upper curve (never a negative real), so the
// principal log is the branch that is continuous in k.
Cplx curve_log_argument(int n, const Cplx& alpha) {
  return std::log(std::sqrt(kTwoPi * n) * (1.0 - alpha));
}

// Newton iteration on the indexing equation from a given start point.
// Returns the converged point; the caller certifies residual and index.
Cplx newton_iterate(int n, int k, Cplx z) {
  const double target_im = kTwoPi * k / n;
  Cplx f = fn_residue(n, z, Side::interior);
  Cplx lf = std::log(f);
  // 2 pi m offset of Ln F fixed so that H(seed) ~ 0, then tracked.
  double m = std::round((n * (phi(z, LogBranch::tilde).imag() + target_im) - lf.imag()) / kTwoPi);
  bool settled = false;
  for (int it = 0; it < 60; ++it) {
    Cplx h = phi(z, LogBranch::tilde) - (lf + Cplx(0.0, kTwoPi * m)) / double(n) +
             Cplx(0.0, target_im);
    PartialSumEval ev = partial_sum_scaled(n, z);
    Cplx e_nphi = std::exp(double(n) * phi(z));
    Cplx fp = double(n) * phi_prime(z) * e_nphi - ev.deriv;
    Cplx hp = phi_prime(z) - fp / f / double(n);
    Cplx step = h / hp;
    Cplx zn = z - step;
    Cplx fn = fn_residue(n, zn, Side::interior);
    Cplx lfn = std::log(fn);
    // If the principal branch wrapped during the step, fold the jump into m.
    m += std::round((lf.imag() - lfn.imag()) / kTwoPi);
    z = zn;
    f = fn;
    lf = lfn;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) {
      if (settled) return z;
      settled = true;
    } else {
      settled = false;
    }
  }
  if (settled) return z;
  std::ostringstream msg;
  msg << "newton_solve: no convergence for n = " << n << ", k = " << k;
  throw ConvergenceError(msg.str());
}

// Start point for newton_solve and the oracle sweeps.
Cplx solver_seed(int n, int k) {
  if (k < kSeedSwitchC * std::cbrt(double(n))) {
    Cplx s = saddle_expansion(n, k, 4).value;
    // At very small n the saddle series overshoots its range; fall through.
    if (std::abs(s - 1.0) < 0.8) return s;
  }
  return curve_expansion(n, k, 2).value;
}

}  // namespace

const char* zero_method_name(ZeroMethod m) {
  switch (m) {
    case ZeroMethod::oracle: return "oracle";
    case ZeroMethod::szego_alpha: return "szego_alpha";
    case ZeroMethod::refined_alpha: return "refined_alpha";
    case ZeroMethod::critical_alpha: return "critical_alpha";
    case ZeroMethod::curve_expansion: return "curve_expansion";
    case ZeroMethod::saddle_expansion: return "saddle_expansion";
    case ZeroMethod::newton_solve: return "newton_solve";
  }
  return "unknown";
}

bool zero_method_from_name(const std::string& name, ZeroMethod* out) {
  static const ZeroMethod all[] = {
      ZeroMethod::oracle,          ZeroMethod::szego_alpha,
      ZeroMethod::refined_alpha,   ZeroMethod::critical_alpha,
      ZeroMethod::curve_expansion, ZeroMethod::saddle_expansion,
      ZeroMethod::newton_solve,
  };
  for (ZeroMethod m : all) {
    if (name == zero_method_name(m)) {
      if (out) *out = m;
      return true;
    }
  }
  return false;
}

Cplx alpha_szego(int n, int k) {
  check_n_range(n, kNewtonMaxN, "alpha_szego");
  check_upper_k(n, k, "alpha_szego");
  const double target = -kTwoPi * k / n;  // required Im phi~
  // Bisection along the curve parametrization: Im phi~ falls monotonically
  // from 0 at theta -> 0 to -pi at theta = pi.
  double lo = 1e-7, hi = kPi;
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    double im = phi(szego_point(mid).z, LogBranch::tilde).imag();
    (im > target ? lo : hi) = mid;
  }
  Cplx z = szego_point(0.5 * (lo + hi)).z;
  const Cplx offset(0.0, -target);
  for (int it = 0; it < 40; ++it) {
    Cplx g = phi(z, LogBranch::tilde) + offset;
    if (std::abs(g) < 1e-15) break;
    z -= g / phi_prime(z);
  }
  if (2 * k == n) z = Cplx(z.real(), 0.0);  // the curve endpoint is real
  if (std::abs(phi(z, LogBranch::tilde) + offset) > kResidualTarget) {
    std::ostringstream msg;
    msg << "alpha_szego: curve equation residual above " << kResidualTarget
        << " for n = " << n << ", k = " << k;
    throw ConvergenceError(msg.str());
  }
  return z;
}

Cplx alpha_refined(int n, int k) {
  check_n_range(n, kNewtonMaxN, "alpha_refined");
  check_upper_k(n, k, "alpha_refined");
  const double excluded = 1.0 / std::sqrt(double(n));
  const Cplx offset(0.0, kTwoPi * k / n);
  const double scale = std::sqrt(kTwoPi * n);
  Cplx z = alpha_szego(n, k);
  auto guard = [&](const Cplx& w) {
    if (std::abs(w - 1.0) < excluded) {
      std::ostringstream msg;
      msg << "alpha_refined: iterate entered |z-1| < n^{-1/2} for n = " << n
          << ", k = " << k;
      throw DomainError(msg.str());
    }
  };
  guard(z);
  Cplx g;
  for (int it = 0; it < 50; ++it) {
    g = phi(z, LogBranch::tilde) + std::log(scale * (1.0 - z)) / double(n) + offset;
    Cplx gp = phi_prime(z) - 1.0 / (double(n) * (1.0 - z));
    Cplx step = g / gp;
    z -= step;
    guard(z);
    if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
  }
  g = phi(z, LogBranch::tilde) + std::log(scale * (1.0 - z)) / double(n) + offset;
  if (std::abs(g) > kResidualTarget) {
    std::ostringstream msg;
    msg << "alpha_refined: residual above " << kResidualTarget << " for n = " << n
        << ", k = " << k;
    throw ConvergenceError(msg.str());
  }
  return z;
}

Cplx alpha_critical(int n, int k) {
  if (n < 1) throw DomainError("alpha_critical: n must be >= 1");
  if (k < 1) throw DomainError("alpha_critical: k must be >= 1");
  const Cplx w = erfc_zero(k).value;
  const Cplx xi = w / std::sqrt(double(n));
  if (std::abs(xi) > kLambdaTrustRadius) {
    std::ostringstream msg;
    msg << "alpha_critical: |w_k|/sqrt(n) = " << std::abs(xi)
        << " outside the conformal trust radius " << kLambdaTrustRadius;
    throw DomainError(msg.str());
  }
  const Cplx z = lambda_eval(xi, kLambdaMaxOrder);
  // Verify the parametrix form of the indexing equation,
  // phi~(z) - (1/n) ln P_n(z) = -2 pi i k / n, with the log offset matched
  // to the nearest 2 pi i multiple.
  const Cplx lnp = std::log(parametrix(n, z));
  const Cplx base = phi(z, LogBranch::tilde) + Cplx(0.0, kTwoPi * k / n);
  const double m = std::round((n * base.imag() - lnp.imag()) / kTwoPi);
  const Cplx resid = base - (lnp + Cplx(0.0, kTwoPi * m)) / double(n);
  if (std::abs(resid) > 1e-9) {
    std::ostringstream msg;
    msg << "alpha_critical: parametrix equation residual " << std::abs(resid)
        << " above 1e-9 for n = " << n << ", k = " << k;
    throw ConvergenceError(msg.str());
  }
  return z;
}

ZeroEstimate curve_expansion(int n, int k, int r) {
  check_n_range(n, kNewtonMaxN, "curve_expansion");
  check_upper_k(n, k, "curve_expansion");
  if (r < 1) throw DomainError("curve_expansion: order must be >= 1");
  if (r > 3) {
    throw UnsupportedOrderError(
        "curve_expansion: corrections beyond the second are not certified");
  }
  const Cplx a = alpha_szego(n, k);
  // Corrections obtained by expanding the indexing equation
  //   n phi~(z) + 2 pi i k = Ln F_n(z)
  // around alpha with F_n replaced by its outer form
  //   (1 + h1(z)/(n (z-1)^2)) / (sqrt(2 pi n) (1 - z)):
  // the j-th correction is a polynomial in y of degree j over (1-alpha)^{2j-1}.
  Cplx corr = 0.0;
  if (r >= 2) {
    const Cplx y = curve_log_argument(n, a);
    const Cplx one_m_a = 1.0 - a;
    corr += y / (double(n) * one_m_a);
    if (r >= 3) {
      const Cplx& x = a;
      const Cplx p2 = 0.5 * y * y - x * y + (x * x + 10.0 * x + 1.0) / 12.0;
      corr += p2 / (double(n) * n * one_m_a * one_m_a * one_m_a);
    }
  }
  const Cplx z = a * (1.0 + corr);
  ZeroEstimate est;
  est.k = k;
  est.n = n;
  est.value = z;
  est.method = ZeroMethod::curve_expansion;
  est.order_r = r;
  est.residual = residual_at(n, z);
  est.error_bound = kCurveBoundC[r - 1] * std::pow(std::log(double(n)) / n, r) *
                    std::pow(double(n) / k, r - 0.5);
  return est;
}

ZeroEstimate saddle_expansion(int n, int k, int r) {
  check_n_range(n, kNewtonMaxN, "saddle_expansion");
  check_upper_k(n, k, "saddle_expansion");
  if (r < 2) throw DomainError("saddle_expansion: order must be >= 2");
  if (r > 4) {
    throw UnsupportedOrderError(
        "saddle_expansion: terms beyond q_3 are not certified");
  }
  const Cplx x = kSqrt2 * erfc_zero(k).value;
  const double rn = std::sqrt(double(n));
  Cplx z = 1.0 + x / rn;
  if (r >= 3) z += (x * x - 1.0) / (3.0 * n);
  if (r >= 4) z += (x * x * x - 7.0 * x) / (36.0 * n * rn);
  ZeroEstimate est;
  est.k = k;
  est.n = n;
  est.value = z;
  est.method = ZeroMethod::saddle_expansion;
  est.order_r = r;
  est.residual = residual_at(n, z);
  est.error_bound = kSaddleBoundC[r - 2] * std::pow(double(k) / n, 0.5 * r);
  return est;
}

std::vector<ZeroEstimate> oracle_zeros(int n) {
  check_n_range(n, kOracleMaxN, "oracle_zeros");
  const int count = n - 1;
  const int upper = (n - 1) / 2;  // conjugate pairs; even n adds a real zero
  const double gn = gn_exact(n);

  std::vector<Cplx> z(count);
  for (int k = 1; k <= upper; ++k) {
    z[k - 1] = solver_seed(n, k);
    z[count - k] = std::conj(z[k - 1]);
  }
  if (n % 2 == 0) z[upper] = Cplx(-kWofInvE, 0.0);

  // Simultaneous root refinement, synchronous sweeps: every candidate takes
  // a Newton step for the full polynomial, deflated against the current
  // positions of all the others.  Seeds are accurate enough that a few
  // sweeps settle the configuration.
  std::vector<Cplx> znext(count);
  std::vector<double> moved(count);
  bool converged = false;
  for (int sweep = 0; sweep < 80 && !converged; ++sweep) {
    parallel_for(count, [&](std::size_t i) {
      const Cplx zi = z[i];
      const Cplx zs = zi * partial_sum_scaled(n, zi).value;
      const Cplx w = zs / (double(n) * (zs - gn));  // Newton step p/p'
      Cplx repulsion = 0.0;
      for (int j = 0; j < count; ++j) {
        if (j != int(i)) repulsion += 1.0 / (zi - z[j]);
      }
      const Cplx step = w / (1.0 - w * repulsion);
      znext[i] = zi - step;
      moved[i] = std::abs(step);
    });
    z.swap(znext);
    converged = true;
    for (int i = 0; i < count; ++i) {
      if (!(moved[i] <= 2e-15 * (1.0 + std::abs(z[i])))) {
        converged = false;
        break;
      }
    }
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "oracle_zeros: simultaneous iteration did not settle for n = " << n
        << "; unsettled starters:";
    for (int i = 0; i < count; ++i) {
      if (!(moved[i] <= 2e-15 * (1.0 + std::abs(z[i])))) msg << ' ' << i;
    }
    throw ConvergenceError(msg.str());
  }

  // Independent per-zero polish removes the collective bias of the sweeps.
  parallel_for(count, [&](std::size_t i) {
    for (int it = 0; it < 3; ++it) {
      PartialSumEval ev = partial_sum_scaled(n, z[i]);
      const Cplx step = ev.value / ev.deriv;
      z[i] -= step;
      if (std::abs(step) < 1e-17) break;
    }
  });

  // Assign indices, then close the set under conjugation exactly.
  std::vector<ZeroEstimate> out(count);
  std::vector<char> taken(n, 0);
  for (int i = 0; i < count; ++i) {
    const int k = k_index(n, z[i]);
    if (k < 1 || k > count || taken[k]) {
      std::ostringstream msg;
      msg << "oracle_zeros: index assignment failed for n = " << n
          << " (candidate " << i << " mapped to k = " << k << ")";
      throw ConvergenceError(msg.str());
    }
    taken[k] = 1;
    out[k - 1].value = z[i];
  }
  for (int k = 1; k <= upper; ++k) {
    if (!(out[k - 1].value.imag() > 0.0)) {
      std::ostringstream msg;
      msg << "oracle_zeros: zero with k = " << k << " not in the upper half plane";
      throw ConvergenceError(msg.str());
    }
    out[count - k].value = std::conj(out[k - 1].value);
  }
  if (n % 2 == 0) {
    out[upper].value = Cplx(out[upper].value.real(), 0.0);
  }

  std::vector<double> residuals(count);
  parallel_for(count, [&](std::size_t i) {
    residuals[i] = residual_at(n, out[i].value);
  });
  for (int i = 0; i < count; ++i) {
    if (!(residuals[i] <= kResidualTarget)) {
      std::ostringstream msg;
      msg << "oracle_zeros: residual " << residuals[i] << " above "
          << kResidualTarget << " at k = " << (i + 1) << ", n = " << n;
      throw ConvergenceError(msg.str());
    }
    out[i].k = i + 1;
    out[i].n = n;
    out[i].method = ZeroMethod::oracle;
    out[i].order_r = 0;
    out[i].residual = residuals[i];
    out[i].error_bound = 0.0;
  }
  return out;
}

ZeroEstimate newton_solve(int n, int k) {
  check_n_range(n, kNewtonMaxN, "newton_solve");
  if (k < 1 || k > n - 1) {
    std::ostringstream msg;
    msg << "newton_solve: k = " << k << " outside [1, n-1] for n = " << n;
    throw DomainError(msg.str());
  }
  if (2 * k > n) {
    ZeroEstimate est = newton_solve(n, n - k);
    est.k = k;
    est.value = std::conj(est.value);
    est.residual = residual_at(n, est.value);
    return est;
  }
  Cplx z = newton_iterate(n, k, solver_seed(n, k));
  if (k_index(n, z) != k) {
    // Rare misconvergence from an asymptotic seed: retry from the curve point.
    z = newton_iterate(n, k, alpha_szego(n, k));
  }
  const int landed = k_index(n, z);
  if (landed != k) {
    std::ostringstream msg;
    msg << "newton_solve: converged to index " << landed << " instead of " << k
        << " for n = " << n;
    throw ConvergenceError(msg.str());
  }
  ZeroEstimate est;
  est.k = k;
  est.n = n;
  est.value = z;
  est.method = ZeroMethod::newton_solve;
  est.order_r = 0;
  est.residual = residual_at(n, z);
  est.error_bound = 0.0;
  if (!(est.residual <= kResidualTarget)) {
    std::ostringstream msg;
    msg << "newton_solve: residual " << est.residual << " above "
        << kResidualTarget << " for n = " << n << ", k = " << k;
    throw ConvergenceError(msg.str());
  }
  return est;
}

std::vector<ZeroEstimate> newton_zero_set(int n) {
  check_n_range(n, kNewtonMaxN, "newton_zero_set");
  const int count = n - 1;
  const int upper = (n - 1) / 2;
  std::vector<ZeroEstimate> out(count);
  parallel_for(upper, [&](std::size_t i) {
    out[i] = newton_solve(n, int(i) + 1);
  });
  if (n % 2 == 0) out[upper] = newton_solve(n, n / 2);
  for (int k = 1; k <= upper; ++k) {
    ZeroEstimate mirror = out[k - 1];
    mirror.k = n - k;
    mirror.value = std::conj(mirror.value);
    out[count - k] = mirror;
  }
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      if (std::abs(out[i].value - out[j].value) < 1e-9) {
        std::ostringstream msg;
        msg << "newton_zero_set: indices " << out[i].k << " and " << out[j].k
            << " collided for n = " << n;
        throw CollisionError(msg.str());
      }
    }
  }
  return out;
}

ZeroMatching match_zeros(const std::vector<ZeroEstimate>& predicted,
                         const std::vector<ZeroEstimate>& oracle) {
  if (oracle.empty()) throw DomainError("match_zeros: empty oracle list");
  if (predicted.size() > oracle.size()) {
    throw DomainError("match_zeros: more predictions than oracle zeros");
  }
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    for (std::size_t j = i + 1; j < oracle.size(); ++j) {
      gap = std::min(gap, std::abs(oracle[i].value - oracle[j].value));
    }
  }
  const double limit = 0.5 * gap;
  ZeroMatching match;
  match.oracle_min_gap = gap;
  match.to_oracle.resize(predicted.size());
  match.distance.resize(predicted.size());
  std::vector<char> used(oracle.size(), 0);
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < oracle.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(predicted[i].value - oracle[j].value);
      if (d < best_d) {
        best_d = d;
        best = int(j);
      }
    }
    if (best < 0 || best_d > limit) {
      std::ostringstream msg;
      msg << "match_zeros: prediction " << i << " is " << best_d
          << " away from the nearest free oracle zero (limit " << limit << ")";
      throw AmbiguityError(msg.str());
    }
    used[best] = 1;
    match.to_oracle[i] = best;
    match.distance[i] = best_d;
    match.max_distance = std::max(match.max_distance, best_d);
  }
  return match;
}

}  // namespace expsum
