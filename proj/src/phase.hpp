#ifndef EXPSUM_PHASE_HPP
#define EXPSUM_PHASE_HPP

#include "errors.hpp"
#include "types.hpp"

// The phase function phi(z) = z - 1 - ln z drives everything in this
// library: |z e^{1-z}| = e^{-Re phi(z)}, so the level set Re phi = 0 inside
// the unit disk is the limit curve of the rescaled zeros, and e^{n phi}
// is the integrand weight of the Cauchy transform.  Two log branches are
// needed: the standard one (cut on the negative reals, Im in (-pi, pi])
// and a "tilde" branch (cut on the nonnegative reals, Im in (0, 2pi)) used
// by the zero-indexing equation.

namespace expsum {

enum class LogBranch { standard, tilde };

// Principal log, Im in (-pi, pi]; the cut itself reports Im = +pi.
Cplx ln_std(const Cplx& z);

// Branch with Im in (0, 2pi); domain excludes the slit [0, +inf).
Cplx ln_tilde(const Cplx& z);

// phi(z) = z - 1 - ln z with the selected branch.
Cplx phi(const Cplx& z, LogBranch branch = LogBranch::standard);

// d/dz phi = 1 - 1/z (branch independent).
Cplx phi_prime(const Cplx& z);

// Sign of Re phi(z) with a small dead band around zero:
// -1 below -tol, +1 above +tol, 0 within [-tol, tol].
int re_phi_sign(const Cplx& z, double tol = 1e-12);

}  // namespace expsum

#endif  // EXPSUM_PHASE_HPP
