#ifndef EXPSUM_PARTIAL_SUM_HPP
#define EXPSUM_PARTIAL_SUM_HPP

#include "dd.hpp"
#include "errors.hpp"
#include "types.hpp"

// Stable evaluation of the scaled exponential partial sum
//   S(z) = (e z)^{-n} p_{n-1}(n z),   p_m(w) = sum_{k=0}^m w^k / k!,
// accurate near its zeros, where the natural summation would need ~n
// digits.  Two internal routes:
//   * direct log-space summation with max-term rescaling (used for |z| >= 1
//     or when the peak term is modest), and
//   * a complementary route S = e^{n phi(z)} - e^{-s(n)} V(z) / sqrt(2 pi n)
//     deep inside the unit disk, where V's terms are non-increasing and the
//     exponent n phi(z) is carried in double-double.
// The route switch is internal; values agree to ~1e-13 on the overlap.

namespace expsum {

struct PartialSumEval {
  Cplx value;  // S(z)
  Cplx deriv;  // S'(z) = n S (1 - 1/z) - n G_n / z (exact identity)
};

// S and S' for 1 <= n <= 2000, z != 0.  Absolute accuracy ~1e-13 near the
// Szego curve (where the zeros live); relative ~1e-12 elsewhere in
// |z| <= ~3.  Overflows only where S itself does (tiny |z|).
PartialSumEval partial_sum_scaled(int n, const Cplx& z);

// Convenience: S(z) alone.
Cplx partial_sum_value(int n, const Cplx& z);

// Logarithmic derivative d/dz ln p_{n-1}(n z) = n p_{n-2}(n z)/p_{n-1}(n z)
// = n (1 - G_n / (z S(z))).  Has poles at the zeros of S.
Cplx log_derivative(int n, const Cplx& z);

// F_n at a point interior to the admissible contour, via the residue
// identity F_n = e^{n phi} - S.  Uses the complementary route directly
// where the two terms would cancel catastrophically.
Cplx interior_f(int n, const Cplx& z);

// G_n = e^{-n} n^{n-1} / (n-1)!, the partial-sum normalizing constant,
// evaluated by an interleaved double-double product (relative error
// ~1e-16 for n <= 1500, ~1e-13 above via the lgamma route).
double gn_exact(int n);

// Two-term Stirling approximation (1/sqrt(2 pi n)) (1 - 1/(12 n)).
double gn_two_term(int n);

}  // namespace expsum

#endif  // EXPSUM_PARTIAL_SUM_HPP
