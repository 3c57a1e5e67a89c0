#include "phase.hpp"

#include <cmath>

namespace expsum {

Cplx ln_std(const Cplx& z) {
  if (z == Cplx(0.0, 0.0)) {
    throw DomainError("ln_std: argument is zero");
  }
  // std::log already returns Im in [-pi, pi]; fold the lower edge Im = -pi
  // (negative real axis approached through -0.0 imaginary part) onto +pi.
  Cplx w = std::log(z);
  if (w.imag() == -kPi) w = Cplx(w.real(), kPi);
  return w;
}

Cplx ln_tilde(const Cplx& z) {
  if (z.imag() == 0.0 && z.real() >= 0.0) {
    throw DomainError("ln_tilde: argument on the slit [0, +inf)");
  }
  Cplx w = std::log(z);
  // Shift arguments in (-pi, 0) up by 2*pi; the negative real axis already
  // carries Im = pi (or -pi through signed zero, fixed the same way).
  if (w.imag() <= 0.0) w = Cplx(w.real(), w.imag() + kTwoPi);
  return w;
}

Cplx phi(const Cplx& z, LogBranch branch) {
  Cplx ln = (branch == LogBranch::standard) ? ln_std(z) : ln_tilde(z);
  return z - 1.0 - ln;
}

Cplx phi_prime(const Cplx& z) {
  if (z == Cplx(0.0, 0.0)) {
    throw DomainError("phi_prime: argument is zero");
  }
  return 1.0 - 1.0 / z;
}

int re_phi_sign(const Cplx& z, double tol) {
  double re = phi(z).real();
  if (re > tol) return 1;
  if (re < -tol) return -1;
  return 0;
}

}  // namespace expsum
