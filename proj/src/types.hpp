#ifndef EXPSUM_TYPES_HPP
#define EXPSUM_TYPES_HPP

#include <complex>

namespace expsum {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;
inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kSqrtPi = 1.77245385090551602730;

// Unique negative real root modulus of r e^{1+r} = 1 (Lambert W of 1/e);
// the curve |z e^{1-z}| = 1 meets the negative real axis at -kWofInvE.
inline constexpr double kWofInvE = 0.27846454276107379510;

inline bool is_finite(const Cplx& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace expsum

#endif  // EXPSUM_TYPES_HPP
