#include "contour.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "phase.hpp"

namespace expsum {

namespace {

// g(r) = ln r + 1 - r cos(theta); the level-curve condition is g = 0 and g
// is strictly increasing in r on (0, 1) since 1/r > 1 >= cos(theta).
double level_g(double r, double c) { return std::log(r) + 1.0 - r * c; }

// r = theta/sin(theta) and its derivative, series-stabilized near 0.
double descent_r(double theta) {
  if (std::abs(theta) < 1e-3) {
    double t2 = theta * theta;
    return 1.0 + t2 / 6.0 + 7.0 * t2 * t2 / 360.0;
  }
  return theta / std::sin(theta);
}

double descent_r_prime(double theta) {
  if (std::abs(theta) < 1e-3) {
    return theta / 3.0 + 7.0 * theta * theta * theta / 90.0;
  }
  double s = std::sin(theta);
  return (s - theta * std::cos(theta)) / (s * s);
}

}  // namespace

CurveSample szego_point(double theta) {
  if (!(theta >= -kPi - 1e-12 && theta <= kPi + 1e-12)) {
    throw DomainError("szego_point: theta outside [-pi, pi]");
  }
  double c = std::cos(theta);
  if (theta == 0.0) {
    return {0.0, 1.0, Cplx(1.0, 0.0)};
  }
  // Safeguarded Newton on the monotone bracket (1e-8, 1].
  double lo = 1e-8, hi = 1.0;
  double r = std::min(1.0, std::exp(c - 1.0) + 0.5);  // crude start inside bracket
  for (int it = 0; it < 50; ++it) {
    double g = level_g(r, c);
    if (std::abs(g) < 1e-15) break;
    if (g > 0) hi = r; else lo = r;
    double gp = 1.0 / r - c;
    double step = g / gp;
    double next = r - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
    if (std::abs(next - r) < 1e-17) { r = next; break; }
    r = next;
  }
  double residual = std::abs(r * std::exp(1.0 - r * c) - 1.0);
  if (residual > 1e-13) {
    throw ConvergenceError("szego_point: residual " + std::to_string(residual) +
                           " above 1e-13 at theta=" + std::to_string(theta));
  }
  return {theta, r, Cplx(r * std::cos(theta), r * std::sin(theta))};
}

CurveSample steepest_descent_point(double theta) {
  if (!(theta > -kPi && theta < kPi)) {
    throw DomainError("steepest_descent_point: theta outside (-pi, pi)");
  }
  double r = descent_r(theta);
  return {theta, r, Cplx(r * std::cos(theta), r * std::sin(theta))};
}

double szego_distance(const Cplx& z) {
  // Coarse scan, then golden-section refinement of theta -> |z - curve(theta)|.
  const int kCoarse = 720;
  double best_theta = 0.0, best_d = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= kCoarse; ++i) {
    double th = -kPi + kTwoPi * i / kCoarse;
    double d = std::abs(z - szego_point(th).z);
    if (d < best_d) { best_d = d; best_theta = th; }
  }
  double a = best_theta - kTwoPi / kCoarse;
  double b = best_theta + kTwoPi / kCoarse;
  a = std::max(a, -kPi);
  b = std::min(b, kPi);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = std::abs(z - szego_point(x1).z), f2 = std::abs(z - szego_point(x2).z);
  for (int it = 0; it < 60; ++it) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - gr * (b - a);
      f1 = std::abs(z - szego_point(x1).z);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + gr * (b - a);
      f2 = std::abs(z - szego_point(x2).z);
    }
  }
  return std::min(f1, f2);
}

ContourSpec make_admissible_contour() {
  ContourSpec c;
  c.label = "descent-arc + left circle |z|=pi/2";
  ContourSegment descent;
  descent.t0 = -kPi / 2;
  descent.t1 = kPi / 2;
  descent.map = [](double th) {
    double r = descent_r(th);
    return Cplx(r * std::cos(th), r * std::sin(th));
  };
  descent.deriv = [](double th) {
    double r = descent_r(th);
    double rp = descent_r_prime(th);
    Cplx e(std::cos(th), std::sin(th));
    return (Cplx(rp, 0) + Cplx(0, r)) * e;
  };
  c.segments.push_back(descent);

  ContourSegment arc;  // |z| = pi/2 from angle pi/2 through pi to 3*pi/2
  arc.t0 = kPi / 2;
  arc.t1 = 3 * kPi / 2;
  arc.map = [](double a) {
    return Cplx(kPi / 2 * std::cos(a), kPi / 2 * std::sin(a));
  };
  arc.deriv = [](double a) {
    return Cplx(0, kPi / 2) * Cplx(std::cos(a), std::sin(a));
  };
  c.segments.push_back(arc);
  return c;
}

ContourSpec make_circle_contour(double radius) {
  if (!(radius > 0)) throw DomainError("make_circle_contour: radius must be positive");
  ContourSpec c;
  c.label = "circle |z|=" + std::to_string(radius);
  ContourSegment s;
  s.t0 = 0.0;
  s.t1 = kTwoPi;
  s.map = [radius](double a) { return Cplx(radius * std::cos(a), radius * std::sin(a)); };
  s.deriv = [radius](double a) {
    return Cplx(0, radius) * Cplx(std::cos(a), std::sin(a));
  };
  c.segments.push_back(s);
  return c;
}

namespace {

// Distance from z to the descent path, refined around theta ~ Im z
// (on the path Im z = theta exactly).
double descent_path_distance(const Cplx& z) {
  double th0 = z.imag();
  double a = th0 - 0.3, b = th0 + 0.3;
  a = std::max(a, -kPi / 2 - 0.2);
  b = std::min(b, kPi / 2 + 0.2);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  auto f = [&z](double th) {
    double r = descent_r(th);
    return std::abs(z - Cplx(r * std::cos(th), r * std::sin(th)));
  };
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1; x1 = b - gr * (b - a); f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2; x2 = a + gr * (b - a); f2 = f(x2);
    }
  }
  return std::min(f1, f2);
}

}  // namespace

ValidationReport validate_admissible(const ContourSpec& c, double eps_hub) {
  ValidationReport rep;
  if (c.segments.empty()) {
    rep.first_violation = "contour has no segments";
    return rep;
  }

  // Closure: each segment must start where the previous one ended.
  bool closed = std::abs(c.end() - c.start()) <= 1e-12;
  for (std::size_t i = 0; i + 1 < c.segments.size(); ++i) {
    Cplx a = c.segments[i].map(c.segments[i].t1);
    Cplx b = c.segments[i + 1].map(c.segments[i + 1].t0);
    if (std::abs(a - b) > 1e-12) closed = false;
  }
  rep.closed_ok = closed;
  if (!closed) {
    rep.first_violation = "contour is not closed";
    return rep;
  }

  // Dense samples for the remaining clauses.
  const int kPerSegment = 512;
  std::vector<Cplx> samples;
  samples.reserve(c.segments.size() * kPerSegment);
  for (const auto& seg : c.segments) {
    for (int i = 0; i < kPerSegment; ++i) {
      double t = seg.t0 + (seg.t1 - seg.t0) * (i + 0.5) / kPerSegment;
      samples.push_back(seg.map(t));
    }
  }

  // Winding number about 0 via unwrapped argument increment.
  double total = 0.0;
  bool winding_well_defined = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Cplx a = samples[i];
    Cplx b = samples[(i + 1) % samples.size()];
    if (std::abs(a) < 1e-12 || std::abs(b) < 1e-12) { winding_well_defined = false; break; }
    total += std::arg(b / a);
  }
  long winding = winding_well_defined ? std::lround(total / kTwoPi) : 0;
  rep.winding_ok = winding_well_defined && winding == 1 &&
                   std::abs(total - kTwoPi) < 1e-6;
  if (!rep.winding_ok) {
    rep.first_violation = "winding number about 0 is not 1";
    return rep;
  }

  // Negativity of Re phi away from the saddle hub.
  double max_re_phi = -std::numeric_limits<double>::infinity();
  for (const Cplx& z : samples) {
    if (std::abs(z - Cplx(1, 0)) <= eps_hub) continue;
    max_re_phi = std::max(max_re_phi, phi(z).real());
  }
  rep.margin = -max_re_phi;
  rep.negativity_ok = max_re_phi < 0.0;
  if (!rep.negativity_ok) {
    rep.first_violation = "Re phi >= 0 on the contour outside the saddle hub";
    return rep;
  }

  // Inside the hub the contour must follow the steepest-descent path.
  rep.hub_ok = true;
  for (const Cplx& z : samples) {
    if (std::abs(z - Cplx(1, 0)) > eps_hub) continue;
    if (descent_path_distance(z) > 1e-10) { rep.hub_ok = false; break; }
  }
  if (!rep.hub_ok) {
    rep.first_violation = "contour deviates from the descent path near the saddle";
    return rep;
  }

  rep.valid = true;
  return rep;
}

double contour_distance(const ContourSpec& c, const Cplx& z) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& seg : c.segments) {
    const int kCoarse = 256;
    double bt = seg.t0;
    for (int i = 0; i <= kCoarse; ++i) {
      double t = seg.t0 + (seg.t1 - seg.t0) * i / kCoarse;
      double d = std::abs(z - seg.map(t));
      if (d < best) { best = d; bt = t; }
    }
    double h = (seg.t1 - seg.t0) / kCoarse;
    double a = std::max(seg.t0, bt - h), b = std::min(seg.t1, bt + h);
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = std::abs(z - seg.map(x1)), f2 = std::abs(z - seg.map(x2));
    for (int it = 0; it < 60; ++it) {
      if (f1 < f2) {
        b = x2; x2 = x1; f2 = f1; x1 = b - gr * (b - a); f1 = std::abs(z - seg.map(x1));
      } else {
        a = x1; x1 = x2; f1 = f2; x2 = a + gr * (b - a); f2 = std::abs(z - seg.map(x2));
      }
    }
    best = std::min(best, std::min(f1, f2));
  }
  return best;
}

}  // namespace expsum
