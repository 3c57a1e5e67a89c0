#include "cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "conformal.hpp"
#include "partial_sum.hpp"
#include "phase.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace expsum {

namespace {

void check_n(int n, const char* where, int n_max = 400) {
  if (n < 1 || n > n_max) {
    throw DomainError(std::string(where) + ": n out of range [1, " +
                      std::to_string(n_max) + "]");
  }
}

// Piece boundaries for one segment: its ends plus the localization knots
// +-4/sqrt(n), +-8/sqrt(n) where they fall inside the parameter range.
std::vector<double> piece_knots(const ContourSegment& seg, int n) {
  std::vector<double> knots = {seg.t0, seg.t1};
  const double w = std::sqrt(static_cast<double>(n));
  for (double t : {-8.0 / w, -4.0 / w, 4.0 / w, 8.0 / w}) {
    if (t > seg.t0 && t < seg.t1) knots.push_back(t);
  }
  std::sort(knots.begin(), knots.end());
  return knots;
}

// Integrates f over all segments of c, splitting each segment's tolerance
// across its pieces proportionally to length.
FnValue contour_integral(const ContourSpec& c, int n,
                         const std::function<Cplx(const Cplx&)>& density,
                         double segment_tol) {
  const double nd = static_cast<double>(n);
  FnValue out;
  for (const ContourSegment& seg : c.segments) {
    auto integrand = [&](double t) -> Cplx {
      Cplx s = seg.map(t);
      return std::exp(nd * phi(s)) * density(s) * seg.deriv(t);
    };
    std::vector<double> knots = piece_knots(seg, n);
    const double seg_len = seg.t1 - seg.t0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
      double tol = segment_tol * std::max(0.05, (knots[i + 1] - knots[i]) / seg_len);
      QuadratureResult r = gk15_adaptive(integrand, knots[i], knots[i + 1], tol);
      out.value += r.value;
      out.error_estimate += r.error_estimate;
    }
  }
  out.value /= Cplx(0.0, kTwoPi);
  out.error_estimate /= kTwoPi;
  return out;
}

// First correction of the local expansion: the regular part at z = 1 of
// 1/lambda_inverse, divided by sqrt(2).  Its Taylor series starts
// 1/3 - (z-1)/12 + 23(z-1)^2/540 - 353(z-1)^3/12960.
Cplx g0_local(const Cplx& z) {
  const Cplx w = z - 1.0;
  if (std::abs(w) < 2e-3) {
    return 1.0 / 3.0 +
           w * (-1.0 / 12.0 + w * (23.0 / 540.0 + w * (-353.0 / 12960.0)));
  }
  return (1.0 / lambda_inverse(z) - kSqrt2 / w) / kSqrt2;
}
Cplx h1_outer(const Cplx& z) { return -(z * z + 10.0 * z + 1.0) / 12.0; }

// h argument of the parametrix; real exactly on the steepest-descent path.
Cplx parametrix_argument(int n, const Cplx& z) {
  check_n(n, "parametrix", 2000);
  if (std::abs(z - 1.0) > 0.5 + 1e-12) {
    throw DomainError("parametrix: |z - 1| must be <= 0.5");
  }
  Cplx xi = lambda_inverse(z);
  return Cplx(0, -1) * std::sqrt(static_cast<double>(n)) * xi;
}

}  // namespace

FnValue fn_quadrature(int n, const Cplx& z, const ContourSpec& c,
                      double segment_tol, double delta_min) {
  check_n(n, "fn_quadrature");
  double d = contour_distance(c, z);
  if (d < delta_min) {
    throw ProximityError("fn_quadrature: z within " + std::to_string(d) +
                         " of the contour (min " + std::to_string(delta_min) +
                         "); use fn_residue");
  }
  auto density = [&](const Cplx& s) { return 1.0 / (s - z); };
  FnValue out = contour_integral(c, n, density, segment_tol);
  const double target = std::max(1e-12, 8.0 * segment_tol * c.segments.size());
  if (out.error_estimate > target) {
    throw QuadratureError("fn_quadrature: error estimate " +
                          std::to_string(out.error_estimate) + " exceeds target");
  }
  return out;
}

Cplx fn_residue(int n, const Cplx& z, Side side) {
  check_n(n, "fn_residue", 2000);
  if (z == Cplx(0, 0)) throw DomainError("fn_residue: z = 0");
  if (side == Side::exterior) return -partial_sum_value(n, z);
  return interior_f(n, z);
}

EvalReport stirling_integral(int n) {
  check_n(n, "stirling_integral");
  ContourSpec c = make_admissible_contour();
  auto density = [](const Cplx&) { return Cplx(1, 0); };
  FnValue primary = contour_integral(c, n, density, 1e-14);
  EvalReport rep;
  rep.quantity = "scaled partial-sum normalizer G_n";
  rep.value_primary = primary.value;
  rep.value_check = Cplx(gn_exact(n), 0.0);
  rep.abs_discrepancy = std::abs(rep.value_primary - rep.value_check);
  rep.method_primary = "gauss-kronrod contour integral";
  rep.method_check = "double-double product e^{-n} n^{n-1}/(n-1)!";
  return rep;
}

Cplx parametrix(int n, const Cplx& z) {
  Cplx zeta = parametrix_argument(n, z);
  if (std::abs(zeta.imag()) <= 1e-12 * (1.0 + std::abs(zeta))) {
    throw JumpLocusError("parametrix: z on the steepest-descent path; use parametrix_side");
  }
  return h_side(zeta, zeta.imag() > 0.0 ? +1 : -1);
}

Cplx parametrix_side(int n, const Cplx& z, Side side) {
  Cplx zeta = parametrix_argument(n, z);
  // The contour interior near z = 1 maps to the upper half plane of the
  // h variable (z = 1 - eps gives zeta = +i eps sqrt(n/2)).
  return h_side(zeta, side == Side::interior ? +1 : -1);
}

Cplx fn_expansion_local(int n, const Cplx& z, int r) {
  check_n(n, "fn_expansion_local", 2000);
  if (r < 1) throw DomainError("fn_expansion_local: r must be >= 1");
  if (r >= 2) {
    throw UnsupportedOrderError(
        "fn_expansion_local: only r = 1 is certified (g_j unavailable for j >= 1)");
  }
  if (std::abs(z - 1.0) > 0.1 + 1e-12) {
    throw DomainError("fn_expansion_local: |z - 1| must be <= 0.1");
  }
  return parametrix(n, z) + g0_local(z) / std::sqrt(kTwoPi * n);
}

Cplx fn_expansion_local_side(int n, const Cplx& z, int r, Side side) {
  check_n(n, "fn_expansion_local", 2000);
  if (r < 1) throw DomainError("fn_expansion_local: r must be >= 1");
  if (r >= 2) {
    throw UnsupportedOrderError(
        "fn_expansion_local: only r = 1 is certified (g_j unavailable for j >= 1)");
  }
  if (std::abs(z - 1.0) > 0.1 + 1e-12) {
    throw DomainError("fn_expansion_local: |z - 1| must be <= 0.1");
  }
  return parametrix_side(n, z, side) + g0_local(z) / std::sqrt(kTwoPi * n);
}

Cplx fn_expansion_outer(int n, const Cplx& z, int r, double min_dist) {
  check_n(n, "fn_expansion_outer", 2000);
  if (r < 1) throw DomainError("fn_expansion_outer: r must be >= 1");
  if (r > 2) {
    throw UnsupportedOrderError("fn_expansion_outer: r in {1, 2} (h_j unavailable for j >= 2)");
  }
  const double dist = std::abs(z - 1.0);
  if (dist < min_dist || dist > 2.0) {
    throw DomainError("fn_expansion_outer: |z - 1| outside [" +
                      std::to_string(min_dist) + ", 2]");
  }
  Cplx lead = 1.0 / (std::sqrt(kTwoPi * n) * (1.0 - z));
  if (r == 1) return lead;
  Cplx d = z - 1.0;
  return lead * (1.0 + h1_outer(z) / (static_cast<double>(n) * d * d));
}

}  // namespace expsum
