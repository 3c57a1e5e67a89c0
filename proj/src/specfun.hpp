#ifndef EXPSUM_SPECFUN_HPP
#define EXPSUM_SPECFUN_HPP

#include "errors.hpp"
#include "types.hpp"

// Complex special functions used by the saddle-point machinery:
//  * v(zeta) = e^{zeta^2} erfc(zeta), the scaled complementary error
//    function, computed without overflow across the plane,
//  * h(zeta) = (1/2 pi i) Int_R e^{-u^2}/(u - zeta) du, the Cauchy transform
//    of the Gaussian, expressible through v: h(zeta) = v(-i zeta)/2 in the
//    upper half plane, h(zeta) = -v(i zeta)/2 in the lower,
//  * the zeros w_k of erfc in the second quadrant, ordered by modulus,
//    which index the zeros of the exponential partial sums near the saddle.

namespace expsum {

// e^{zeta^2} erfc(zeta).  Relative error <= ~1e-13 away from the zeros of
// erfc.  Overflows (IEEE inf) only where the function itself does, i.e.
// Re(zeta^2) beyond ~709 with Re zeta < 0.
Cplx scaled_erfc(const Cplx& zeta);

// erfc(zeta) = e^{-zeta^2} v(zeta).
Cplx erfc_full(const Cplx& zeta);

// Gaussian Cauchy transform; DomainError on the real axis, where the
// function jumps by e^{-t^2}.
Cplx h_transform(const Cplx& zeta);

// One-sided analytic continuations across the real axis: side = +1 is the
// branch continued from Im zeta > 0, side = -1 from below.  Off the axis
// the matching side agrees with h_transform.
Cplx h_side(const Cplx& zeta, int side);

struct ErfcZero {
  int k = 0;         // 1-based index, increasing modulus
  Cplx value;        // second-quadrant zero of erfc
  double residual = 0.0;  // |erfc(value)|
};

// k-th zero of erfc in the second quadrant (|w_k| ~ sqrt(2 pi k)).  Newton
// on the logarithmic form w^2 - ln(v(-w)/2) + 2 pi i k = 0, whose residual
// also certifies the index; each zero is additionally certified by an
// argument-principle winding count around a surrounding box.  Results are
// cached.
ErfcZero erfc_zero(int k);

// |w_k^2 - ln(v(-w_k)/2) + 2 pi i k| with the log branch resolved by
// nearest-integer matching of the imaginary part; consistency diagnostic.
double log_relation_check(int k);
double log_relation_residual(const Cplx& w, int k);  // same, at a given point

}  // namespace expsum

#endif  // EXPSUM_SPECFUN_HPP
