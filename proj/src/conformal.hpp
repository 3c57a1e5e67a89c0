#ifndef EXPSUM_CONFORMAL_HPP
#define EXPSUM_CONFORMAL_HPP

#include <vector>

#include "errors.hpp"
#include "types.hpp"

// The conformal map lambda normalizing the saddle of phi to a pure square:
// phi(lambda(xi)) = xi^2 near xi = 0, with lambda(0) = 1 and the branch
// fixed by lambda'(0) = sqrt(2) > 0.  Taylor coefficients are rational
// multiples of powers of sqrt(2) and are computed in exact rational
// arithmetic; the construction verifies the functional equation
// coefficient-by-coefficient exactly before rounding to double.

namespace expsum {

struct SeriesExpansion {
  Cplx center;
  std::vector<Cplx> coefficients;  // index m holds the xi^m coefficient
  double trust_radius = 0.0;
};

inline constexpr double kLambdaTrustRadius = 0.35;
inline constexpr int kLambdaMaxOrder = 30;

// Taylor coefficients c_0..c_order of lambda at 0 (c_0 = 1, c_1 = sqrt 2,
// c_2 = 2/3, c_3 = sqrt(2)/18, ...).  order <= 30.
SeriesExpansion lambda_coefficients(int order);

// Truncated series evaluation; requires |xi| <= trust radius.
Cplx lambda_eval(const Cplx& xi, int order);

// Inverse map xi = sqrt(phi(z)) with the branch that behaves like
// (z-1)/sqrt(2) near z = 1, computed via the analytic factorization
// xi = ((z-1)/sqrt 2) * sqrt(rho(z)), rho(z) = 2 phi(z)/(z-1)^2, rho(1) = 1.
// Requires |z - 1| <= 0.5.
Cplx lambda_inverse(const Cplx& z);

}  // namespace expsum

#endif  // EXPSUM_CONFORMAL_HPP
