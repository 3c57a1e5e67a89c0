#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "../src/specfun.hpp"
#include "oracle.hpp"

using expsum::Cplx;
using expsum::kPi;
using expsum::kSqrtPi;
using expsum::kTwoPi;

namespace {

double rel_err(const Cplx& got, const Cplx& want) {
  return std::abs(got - want) / std::abs(want);
}

Cplx from_oracle(const oracle::CLD& v) {
  return Cplx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
}

}  // namespace

TEST_CASE("scaled erfc matches frozen high-precision values") {
  struct Ref {
    Cplx zeta;
    Cplx value;
  };
  // Frozen from a 30-digit multiprecision evaluation of e^{z^2} erfc(z).
  const Ref refs[] = {
      {{1.0, 0.0}, {0.427583576155807004411, 0.0}},
      {{2.0, 0.0}, {0.255395676310505743865, 0.0}},
      {{3.0, 0.0}, {0.179001151181389950419, 0.0}},
      {{5.5, 0.0}, {0.100962218399499088233, 0.0}},
      {{3.0, 4.0}, {0.0697909616496483100523, -0.0893400002403649153624}},
      {{0.5, 5.0}, {0.0119003255225939483894, -0.113972718631886719055}},
      {{5.0, 0.1}, {0.110664244649778363844, -0.00213252632912999937949}},
      {{2.5, 2.5}, {0.116737125044650261434, -0.107908585996481413882}},
      {{0.1, 3.0}, {0.00794268099876999026924, -0.200742343098677372026}},
      {{7.0, 2.0}, {0.0740288504470582492499, -0.0207677453952895402249}},
      {{1.5, 0.5}, {0.303355119913191534392, -0.0778508741261505952972}},
  };
  for (const Ref& r : refs) {
    CAPTURE(r.zeta);
    CHECK(rel_err(expsum::scaled_erfc(r.zeta), r.value) <= 1e-13);
    // conjugate pair exercises the lower-half-plane reflection
    CHECK(rel_err(expsum::scaled_erfc(std::conj(r.zeta)), std::conj(r.value)) <= 1e-13);
  }
}

TEST_CASE("scaled erfc agrees with the defining integral across the plane") {
  // Right half plane: direct tanh-sinh oracle.  Rings straddle the internal
  // region crossovers at |zeta| = 2 and |zeta| = 6.
  const double radii[] = {0.3, 1.0, 1.9, 2.0, 2.1, 3.5, 5.0,
                          5.9, 6.0, 6.1, 8.0, 12.0};
  for (double rad : radii) {
    for (int i = 0; i <= 16; ++i) {
      double ang = -kPi / 2 + kPi * i / 16.0;
      Cplx zeta = std::polar(rad, ang);
      CAPTURE(rad);
      CAPTURE(ang);
      Cplx want = from_oracle(oracle::v_integral(oracle::CLD(zeta.real(), zeta.imag())));
      CHECK(rel_err(expsum::scaled_erfc(zeta), want) <= 1e-13);
    }
  }
}

TEST_CASE("scaled erfc left-half-plane reflection against the oracle") {
  // Moderate |zeta| so that e^{zeta^2} stays well-scaled in the comparison.
  const Cplx pts[] = {{-0.5, 0.7},  {-1.5, 1.0},  {-2.0, 2.5}, {-1.0, 3.0},
                      {-3.0, 1.0},  {-2.5, -2.5}, {-4.0, 4.0}, {-0.2, -5.0},
                      {-1.4, 2.0},  {-2.2, 0.3}};
  for (const Cplx& zeta : pts) {
    CAPTURE(zeta);
    Cplx want = from_oracle(oracle::v_any(oracle::CLD(zeta.real(), zeta.imag())));
    CHECK(rel_err(expsum::scaled_erfc(zeta), want) <= 1e-12);
  }
}

TEST_CASE("erfc_full reproduces the real error function") {
  for (double x : {0.0, 0.25, 0.5, 1.0, 2.0, 3.5, 5.0}) {
    CHECK(std::abs(expsum::erfc_full(Cplx(x, 0)).real() - std::erfc(x)) <=
          1e-14 * std::max(1.0, std::erfc(x)));
    CHECK(expsum::erfc_full(Cplx(x, 0)).imag() == 0.0);
  }
}

TEST_CASE("gaussian cauchy transform: frozen values and integral oracle") {
  // h(i) = v(1)/2 and h(10i) = v(10)/2 via the upper-half-plane relation.
  CHECK(rel_err(expsum::h_transform(Cplx(0, 1)), Cplx(0.213791788077903502205, 0)) <= 1e-13);
  CHECK(rel_err(expsum::h_transform(Cplx(0, 10)), Cplx(0.0280704963719112929288, 0)) <= 1e-13);

  const Cplx pts[] = {{0.7, 0.9},  {-1.3, 0.5}, {2.0, -1.0}, {-0.4, -2.2},
                      {3.0, 3.0},  {-5.0, 1.0}, {0.0, 4.0},  {1.5, -0.6}};
  for (const Cplx& zeta : pts) {
    CAPTURE(zeta);
    Cplx want = from_oracle(oracle::h_integral(oracle::CLD(zeta.real(), zeta.imag())));
    CHECK(rel_err(expsum::h_transform(zeta), want) <= 1e-12);
  }
}

TEST_CASE("gaussian cauchy transform: jump across the real axis") {
  // h_+(t) - h_-(t) = e^{-t^2}: the boundary values differ by the density.
  for (double t : {-3.0, -1.0, -0.2, 0.0, 0.4, 1.7, 2.5}) {
    CAPTURE(t);
    Cplx jump = expsum::h_side(Cplx(t, 0), +1) - expsum::h_side(Cplx(t, 0), -1);
    CHECK(std::abs(jump - Cplx(std::exp(-t * t), 0)) <= 1e-13);
  }
  // Off the axis, the matching side agrees with the two-sided function and
  // approaches it as the axis is neared.
  for (double t : {-1.0, 0.5}) {
    for (double d : {1e-3, 1e-6}) {
      CHECK(std::abs(expsum::h_side(Cplx(t, d), +1) - expsum::h_transform(Cplx(t, d))) == 0.0);
      CHECK(std::abs(expsum::h_side(Cplx(t, -d), -1) - expsum::h_transform(Cplx(t, -d))) == 0.0);
    }
  }
  CHECK_THROWS_AS(expsum::h_transform(Cplx(0.3, 0.0)), expsum::DomainError);
}

TEST_CASE("gaussian cauchy transform: large-argument expansion") {
  // h(zeta) = -(1/(2 pi i)) sum_m Gamma(m+1/2) / zeta^{2m+1}; the m = 0
  // coefficient is Gamma(1/2) = sqrt(pi).  Three terms at |zeta| = 50
  // leave a ~Gamma(7/2)/|zeta|^7 tail.
  const Cplx pts[] = {{0.0, 50.0}, {30.0, 30.0}, {-40.0, 20.0}, {10.0, -60.0}};
  for (const Cplx& zeta : pts) {
    CAPTURE(zeta);
    Cplx inv2 = 1.0 / (zeta * zeta);
    Cplx series = kSqrtPi * (1.0 + inv2 * (0.5 + inv2 * 0.75)) / zeta;
    Cplx want = -series / Cplx(0, kTwoPi);
    CHECK(rel_err(expsum::h_transform(zeta), want) <= 1e-7);
  }
}

TEST_CASE("conjugation symmetry of v and h") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> box(-6.0, 6.0);
  for (int i = 0; i < 200; ++i) {
    Cplx zeta(box(rng), box(rng));
    CHECK(expsum::scaled_erfc(std::conj(zeta)) == std::conj(expsum::scaled_erfc(zeta)));
    if (zeta.imag() != 0.0) {
      // h(conj zeta) = -conj(h(zeta)): the Gaussian density is real.
      Cplx lhs = expsum::h_transform(std::conj(zeta));
      Cplx rhs = -std::conj(expsum::h_transform(zeta));
      CHECK(std::abs(lhs - rhs) <= 1e-15 * (1.0 + std::abs(lhs)));
    }
  }
}

TEST_CASE("second-quadrant erfc zeros: frozen locations and residuals") {
  struct Ref {
    int k;
    Cplx w;
  };
  // Frozen from a 30-digit multiprecision root find on erfc.
  const Ref refs[] = {
      {1, {-1.3548101281120062489, 1.99146684283387957728}},
      {2, {-2.17704490608961591154, 2.69114902425143882885}},
      {3, {-2.78438761323042816882, 3.23533086835281645005}},
      {4, {-3.28741078938984856746, 3.69730970246846839781}},
      {5, {-3.72594871944579042386, 4.10610728468263205492}},
      {6, {-4.11963522761173052587, 4.47681569296754570201}},
      {7, {-4.47983279773120232166, 4.81848829188331916543}},
      {8, {-4.8138066820444342545, 5.13706727126634745718}},
      {9, {-5.12653154549691946318, 5.43670391073399739808}},
      {10, {-5.42158857692298128695, 5.72043485101455238606}},
      {11, {-5.70165644565102854626, 5.99056139117961101338}},
      {12, {-5.96880028709230692735, 6.24887726611758168709}},
  };
  for (const Ref& r : refs) {
    CAPTURE(r.k);
    expsum::ErfcZero z = expsum::erfc_zero(r.k);
    CHECK(z.k == r.k);
    CHECK(std::abs(z.value - r.w) <= 1e-12);
    CHECK(z.residual <= 1e-12);
    CHECK(z.value.real() < 0.0);
    CHECK(z.value.imag() > 0.0);
  }
}

TEST_CASE("second-quadrant erfc zeros: ordering and asymptotic modulus") {
  double prev = 0.0;
  for (int k = 1; k <= 12; ++k) {
    double mod = std::abs(expsum::erfc_zero(k).value);
    CHECK(mod > prev);
    prev = mod;
    // |w_k| ~ sqrt(2 pi k) with a logarithmic correction.
    CHECK(std::abs(mod / std::sqrt(kTwoPi * k) - 1.0) < 0.12);
  }
  CHECK_THROWS_AS(expsum::erfc_zero(0), expsum::DomainError);
}

TEST_CASE("logarithmic zero relation certifies index and location") {
  for (int k = 1; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(expsum::log_relation_check(k) <= 1e-10);
  }
  // The relation has real diagnostic power: a small perturbation of the
  // zero produces a residual orders of magnitude above the pass level.
  Cplx w1 = expsum::erfc_zero(1).value;
  CHECK(expsum::log_relation_residual(w1 + Cplx(0.01, 0.0), 1) > 1e-3);
  CHECK(expsum::log_relation_residual(w1 + Cplx(0.0, 0.01), 1) > 1e-3);
}
