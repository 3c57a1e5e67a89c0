#include "conformal.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

#include "phase.hpp"

namespace expsum {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Element a + b*sqrt(2) of the ring Q[sqrt 2]; closed under the recursion
// because dividing by sqrt(2) maps a + b*sqrt(2) to b + (a/2)*sqrt(2).
struct Q2 {
  Rational a{0};
  Rational b{0};

  Q2() = default;
  Q2(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  bool is_zero() const { return a == 0 && b == 0; }

  double to_double() const {
    const long double sqrt2 = 1.41421356237309504880168872420970L;
    return static_cast<double>(a.convert_to<long double>() +
                               b.convert_to<long double>() * sqrt2);
  }
};

Q2 operator+(const Q2& x, const Q2& y) { return {x.a + y.a, x.b + y.b}; }
Q2 operator-(const Q2& x, const Q2& y) { return {x.a - y.a, x.b - y.b}; }
Q2 operator*(const Q2& x, const Q2& y) {
  return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}
Q2 mul_rational(const Q2& x, const Rational& r) { return {x.a * r, x.b * r}; }
Q2 div_sqrt2(const Q2& x) { return {x.b, x.a / 2}; }  // (a+b*s)/s = b + (a/2)*s

using Q2Series = std::vector<Q2>;  // coefficients of powers of xi

// Truncated product of two series, keeping coefficients up to max_order.
Q2Series series_mul(const Q2Series& x, const Q2Series& y, std::size_t max_order) {
  Q2Series out(std::min(max_order + 1, x.size() + y.size() - 1));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size() && i + j <= max_order; ++j) {
      out[i + j] = out[i + j] + x[i] * y[j];
    }
  }
  return out;
}

// Coefficients of phi(1 + u(xi)) = u^2/2 - u^3/3 + u^4/4 - ... through
// xi^max_order, where u is a series with u[0] = 0.
Q2Series compose_phi(const Q2Series& u, std::size_t max_order) {
  Q2Series result(max_order + 1);
  Q2Series upow = series_mul(u, u, max_order);  // u^2
  int sign = 1;                                 // (-1)^j for j = 2
  for (std::size_t j = 2; j <= max_order; ++j) {
    Rational factor = Rational(sign, static_cast<long>(j));
    for (std::size_t m = 0; m < upow.size(); ++m) {
      if (!upow[m].is_zero()) result[m] = result[m] + mul_rational(upow[m], factor);
    }
    if (j < max_order) upow = series_mul(upow, u, max_order);
    sign = -sign;
  }
  return result;
}

// Exact coefficients of lambda through the requested order, determined by
// matching phi(lambda(xi)) = xi^2 power by power; each new coefficient
// appears linearly with factor sqrt(2) through the u^2/2 term.
std::vector<Q2> exact_lambda_coefficients(int order) {
  std::vector<Q2> c(order + 1);
  c[0] = Q2{1, 0};
  if (order >= 1) c[1] = Q2{0, 1};  // sqrt(2): positive root of c1^2/2 = 1
  for (int m = 2; m <= order; ++m) {
    Q2Series u(m + 1);  // u = lambda - 1 with c_m still unknown (0)
    for (int i = 1; i < m; ++i) u[i] = c[i];
    Q2Series comp = compose_phi(u, m + 1);
    // Coefficient of xi^{m+1} must vanish: sqrt(2)*c_m + comp[m+1] = 0.
    c[m] = div_sqrt2(Q2{-comp[m + 1].a, -comp[m + 1].b});
  }
  // Certify: with all coefficients in place the composition must equal
  // xi^2 exactly through xi^{order+1}.
  Q2Series u(order + 1);
  for (int i = 1; i <= order; ++i) u[i] = c[i];
  Q2Series comp = compose_phi(u, order + 1);
  for (int k = 0; k <= order + 1; ++k) {
    Q2 want = (k == 2) ? Q2{1, 0} : Q2{0, 0};
    if (!(comp[k] - want).is_zero()) {
      throw ConvergenceError("lambda_coefficients: exact verification failed at power " +
                             std::to_string(k));
    }
  }
  return c;
}

const std::vector<double>& cached_double_coefficients() {
  static std::vector<double> cache = [] {
    std::vector<Q2> exact = exact_lambda_coefficients(kLambdaMaxOrder);
    std::vector<double> d(exact.size());
    for (std::size_t i = 0; i < exact.size(); ++i) d[i] = exact[i].to_double();
    return d;
  }();
  return cache;
}

}  // namespace

SeriesExpansion lambda_coefficients(int order) {
  if (order < 1 || order > kLambdaMaxOrder) {
    throw DomainError("lambda_coefficients: order must be in [1, 30]");
  }
  const std::vector<double>& all = cached_double_coefficients();
  SeriesExpansion s;
  s.center = Cplx(0, 0);
  s.trust_radius = kLambdaTrustRadius;
  s.coefficients.assign(all.begin(), all.begin() + order + 1);
  return s;
}

Cplx lambda_eval(const Cplx& xi, int order) {
  if (order < 1 || order > kLambdaMaxOrder) {
    throw DomainError("lambda_eval: order must be in [1, 30]");
  }
  if (std::abs(xi) > kLambdaTrustRadius) {
    throw DomainError("lambda_eval: |xi| exceeds the trust radius 0.35");
  }
  const std::vector<double>& c = cached_double_coefficients();
  Cplx acc(c[order], 0);
  for (int m = order - 1; m >= 0; --m) acc = acc * xi + c[m];
  return acc;
}

Cplx lambda_inverse(const Cplx& z) {
  Cplx u = z - 1.0;
  double au = std::abs(u);
  if (au > 0.5) {
    throw DomainError("lambda_inverse: |z - 1| exceeds 0.5");
  }
  Cplx rho;
  if (au < 0.25) {
    // rho(z) = 2 phi(z)/(z-1)^2 = sum_{j>=0} 2 (-1)^j u^j/(j+2); at
    // |u| < 0.25 forty terms put the tail below 1e-25.
    Cplx acc(0, 0);
    Cplx upow(1, 0);
    double sign = 1.0;
    for (int j = 0; j <= 40; ++j) {
      acc += upow * (2.0 * sign / (j + 2));
      upow *= u;
      sign = -sign;
    }
    rho = acc;
  } else {
    rho = 2.0 * phi(z) / (u * u);
  }
  // rho stays in the right half plane on this disk, so the principal square
  // root is the continuous branch with sqrt(rho(1)) = 1.
  return u / kSqrt2 * std::sqrt(rho);
}

}  // namespace expsum
