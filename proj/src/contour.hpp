#ifndef EXPSUM_CONTOUR_HPP
#define EXPSUM_CONTOUR_HPP

#include <functional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "types.hpp"

// Curves of the problem geometry:
//  * the inner level curve {|z| <= 1 : |z e^{1-z}| = 1} on which the rescaled
//    zeros accumulate (classically known as the Szego curve),
//  * the steepest-descent path r = theta/sin(theta) through the saddle z = 1
//    (the locus arg z = Im z, on which Im phi = 0),
//  * closed integration contours that follow the descent path near the saddle
//    and otherwise stay strictly inside {Re phi < 0}.

namespace expsum {

struct CurveSample {
  double theta = 0.0;  // polar angle, radians
  double r = 0.0;      // modulus
  Cplx z;              // r * e^{i theta}
};

// Unique r in (0, 1] with r * e^{1 - r cos(theta)} = 1; safeguarded Newton
// on a monotone bracket, residual <= 1e-13.  theta in [-pi, pi].
CurveSample szego_point(double theta);

// Point of the steepest-descent path, r = theta/sin(theta) (r = 1 at 0).
// theta in (-pi, pi).
CurveSample steepest_descent_point(double theta);

// Distance from z to the level curve |s e^{1-s}| = 1, |s| <= 1: coarse scan
// over theta followed by golden-section refinement.
double szego_distance(const Cplx& z);

struct ContourSegment {
  std::function<Cplx(double)> map;    // t -> z(t)
  std::function<Cplx(double)> deriv;  // t -> z'(t)
  double t0 = 0.0;
  double t1 = 1.0;
};

// Piecewise-smooth closed curve, traversed counterclockwise, winding once
// around the origin.
struct ContourSpec {
  std::vector<ContourSegment> segments;
  std::string label;

  Cplx start() const { return segments.front().map(segments.front().t0); }
  Cplx end() const { return segments.back().map(segments.back().t1); }
};

// Default integration contour: descent arc r = theta/sin(theta) for
// |theta| <= pi/2, closed through the left half plane by the circular arc
// |z| = pi/2.  Re phi < 0 everywhere on it except at z = 1.
ContourSpec make_admissible_contour();

// Circle |z| = radius, counterclockwise; useful as a deliberately
// non-admissible input for validation tests.
ContourSpec make_circle_contour(double radius);

struct ValidationReport {
  bool valid = false;
  std::string first_violation;  // empty when valid
  bool closed_ok = false;
  bool winding_ok = false;
  bool negativity_ok = false;  // Re phi <= -margin outside the saddle hub
  bool hub_ok = false;         // follows the descent path inside the hub
  double margin = 0.0;         // reported delta > 0 for the negativity clause
};

// Checks, in order: closure, winding number 1 about 0, Re phi(z) <= -delta
// for some delta > 0 at all samples with |z - 1| > eps_hub, and coincidence
// with the descent parametrization (distance <= 1e-10) inside the hub.
ValidationReport validate_admissible(const ContourSpec& c, double eps_hub = 0.25);

// Shortest distance from z to the contour (sampled + refined); used for the
// quadrature proximity guard.
double contour_distance(const ContourSpec& c, const Cplx& z);

}  // namespace expsum

#endif  // EXPSUM_CONTOUR_HPP
