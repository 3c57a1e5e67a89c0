#ifndef EXPSUM_QUADRATURE_HPP
#define EXPSUM_QUADRATURE_HPP

#include <functional>

#include "errors.hpp"
#include "types.hpp"

// Adaptive complex-valued quadrature over real parameter intervals, the
// workhorse under the contour integrals.

namespace expsum {

struct QuadratureResult {
  Cplx value;
  double error_estimate = 0.0;
  long evaluations = 0;
};

// Gauss-Kronrod 15(7) with recursive bisection.  The absolute-error budget
// halves with each split, so the summed estimate of the accepted leaves is
// <= abs_tol; if a leaf at max_depth still exceeds its share, the final
// estimate reflects that and QuadratureError is thrown.
QuadratureResult gk15_adaptive(const std::function<Cplx(double)>& f,
                               double t0, double t1, double abs_tol,
                               int max_depth = 28);

}  // namespace expsum

#endif  // EXPSUM_QUADRATURE_HPP
