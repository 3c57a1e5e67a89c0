#ifndef EXPSUM_CAUCHY_HPP
#define EXPSUM_CAUCHY_HPP

#include <string>

#include "contour.hpp"
#include "errors.hpp"
#include "types.hpp"

// The Cauchy transform F_n(z) = (1/2 pi i) Int_gamma e^{n phi(s)}/(s-z) ds
// over an admissible contour, computed two independent ways (adaptive
// contour quadrature and the exact residue identity through the partial
// sum), plus the saddle-point objects that approximate it: the local
// parametrix built from the Gaussian Cauchy transform, and the local/outer
// asymptotic expansions.

namespace expsum {

// Which side of the contour (equivalently of the local jump locus) a
// boundary-ambiguous evaluation should continue from.
enum class Side { interior, exterior };

struct FnValue {
  Cplx value;
  double error_estimate = 0.0;
};

// Two-route evaluation summary for cross-validated quantities.
struct EvalReport {
  std::string quantity;
  Cplx value_primary;
  Cplx value_check;
  double abs_discrepancy = 0.0;
  std::string method_primary;
  std::string method_check;
};

// F_n by per-segment adaptive Gauss-Kronrod quadrature.  The descent arc is
// pre-split at |t| in {4/sqrt n, 8/sqrt n} where e^{n phi} localizes.  With
// the default per-segment tolerance the returned error estimate is
// <= 1e-12.  Throws ProximityError when dist(z, contour) < delta_min and
// QuadratureError when the estimate misses the target.
FnValue fn_quadrature(int n, const Cplx& z, const ContourSpec& c,
                      double segment_tol = 1e-13, double delta_min = 0.02);

// F_n via the residue identity: -S(z) outside the contour,
// e^{n phi(z)} - S(z) inside (cancellation-safe route).  Exact arbitrarily
// close to the contour; the side flag must match z's actual position.
Cplx fn_residue(int n, const Cplx& z, Side side);

// G_n = (1/2 pi i) Int_gamma e^{n phi(s)} ds, quadrature vs the closed form
// e^{-n} n^{n-1}/(n-1)!.
EvalReport stirling_integral(int n);

// Local parametrix P_n(z) = h(-i sqrt(n) lambda^{-1}(z)) on |z-1| <= 0.5.
// parametrix() throws JumpLocusError on the steepest-descent path (where h
// would sit on its jump line); parametrix_side() continues from the chosen
// side (interior of the contour maps to the upper h branch).
Cplx parametrix(int n, const Cplx& z);
Cplx parametrix_side(int n, const Cplx& z, Side side);

// Local expansion F_n ~ P_n(z) + g0(z)/sqrt(2 pi n) on |z-1| <= 0.1 with
// g0(z) = (1/lambda_inverse(z) - sqrt(2)/(z-1))/sqrt(2), the regular part
// of the leading residue kernel at z = 1 (Taylor head 1/3 - (z-1)/12);
// only r = 1 is certified (higher g_j unavailable).
Cplx fn_expansion_local(int n, const Cplx& z, int r);
Cplx fn_expansion_local_side(int n, const Cplx& z, int r, Side side);

// Outer expansion F_n ~ (1/(sqrt(2 pi n)(1-z))) (1 + h1(z)/(n(z-1)^2)) with
// h1(z) = -(z^2 + 10 z + 1)/12; r in {1, 2}.  Valid on both sides of the
// contour for min_dist <= |z-1| <= 2.
Cplx fn_expansion_outer(int n, const Cplx& z, int r, double min_dist = 0.05);

}  // namespace expsum

#endif  // EXPSUM_CAUCHY_HPP
