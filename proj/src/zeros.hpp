#ifndef EXPSUM_ZEROS_HPP
#define EXPSUM_ZEROS_HPP

#include <string>
#include <vector>

#include "errors.hpp"
#include "types.hpp"

// Zero location for the rescaled partial sums p_{n-1}(n z).  Every zero
// solves the indexing equation
//   phi~(z) - (1/n) Ln F_n(z) = -2 pi i k / n,    k = 1 .. n-1,
// where phi~ uses the log branch with Im in (0, 2pi).  The index k runs
// along the limit curve away from the saddle z = 1; conjugate zeros carry
// indices k and n-k, and for even n the single real (negative) zero gets
// k = n/2.  Methods, from certified-slow to asymptotic-fast:
//   * oracle_zeros        all n-1 zeros at once, Aberth-Ehrlich + polish,
//   * alpha_szego         curve equation phi~ = -2 pi i k/n (on the curve),
//   * alpha_refined       curve equation with the 1/n transform correction,
//   * alpha_critical      conformal image of the k-th erfc zero,
//   * curve_expansion     corrections around alpha_szego, away from z = 1,
//   * saddle_expansion    erfc-zero series in powers of n^{-1/2} near z = 1,
//   * newton_solve        Newton on the indexing equation itself.

namespace expsum {

enum class ZeroMethod {
  oracle,
  szego_alpha,
  refined_alpha,
  critical_alpha,
  curve_expansion,
  saddle_expansion,
  newton_solve,
};

const char* zero_method_name(ZeroMethod m);

// Parses the names emitted by zero_method_name; returns false on unknown.
bool zero_method_from_name(const std::string& name, ZeroMethod* out);

struct ZeroEstimate {
  int k = 0;       // index in the phase equation, 1 <= k <= n-1
  int n = 0;       // degree parameter: zero of p_{n-1}(n z)
  Cplx value;      // the estimate itself
  ZeroMethod method = ZeroMethod::oracle;
  int order_r = 0;           // expansion order, 0 for non-expansion methods
  double residual = 0.0;     // |S(value)|, S the scaled partial sum
  double error_bound = 0.0;  // a-priori distance bound, 0 where certified
};

// All n-1 zeros for 2 <= n <= 500, sorted by k.  Aberth-Ehrlich sweeps from
// expansion seeds, then independent Newton polish; the returned set is
// conjugate-closed exactly (lower half mirrored from upper) and every
// residual is certified <= 1e-12.
std::vector<ZeroEstimate> oracle_zeros(int n);

// Solution of phi~(z) = -2 pi i k/n for 1 <= k <= n/2; lies on the level
// curve |z e^{1-z}| = 1 in the closed upper half disk.  Bisection along the
// curve parametrization, then complex Newton; residual <= 1e-12.
Cplx alpha_szego(int n, int k);

// Solution of phi~(z) + (1/n) ln(sqrt(2 pi n)(1-z)) = -2 pi i k/n, seeded
// at alpha_szego; lies slightly off the curve.  DomainError if an iterate
// enters the excluded disk |z-1| < n^{-1/2}.
Cplx alpha_refined(int n, int k);

// lambda(w_k / sqrt n): the conformal image of the k-th erfc zero, valid
// while |w_k|/sqrt(n) stays inside the conformal trust radius.  The result
// is verified against the parametrix form of the indexing equation,
// phi~(z) - (1/n) ln P_n(z) = -2 pi i k/n, to 1e-9.
Cplx alpha_critical(int n, int k);

// Multiplicative corrections around alpha_szego:
//   z = alpha (1 + sum_{j=1}^{r-1} P_j(alpha, y) / (n^j (1-alpha)^{2j-1})),
//   y = ln[sqrt(2 pi n) (1 - alpha)]  (principal log; continuous along the
//   upper curve since 1 - alpha stays in the closed fourth quadrant).
//   P_1 = y and P_2 = y^2/2 - x y + (x^2 + 10 x + 1)/12 at x = alpha follow
//   from the indexing equation with F_n in its outer form; the fitted
//   coefficients are cross-checked against the brute-force zeros.
//   r in {1, 2, 3}; error_bound ~ (ln n / n)^r (n/k)^{r-1/2}.
ZeroEstimate curve_expansion(int n, int k, int r);

// Additive series around the saddle from the k-th erfc zero, x = sqrt(2) w_k:
//   z = 1 + q_1(x)/n^{1/2} + ... + q_{r-1}(x)/n^{(r-1)/2},
//   q_1 = x, q_2 = (x^2 - 1)/3, q_3 = (x^3 - 7x)/36.
// r in {2, 3, 4}; error_bound ~ (k/n)^{r/2}.
ZeroEstimate saddle_expansion(int n, int k, int r);

// Newton iteration on H(z) = phi~(z) - (1/n) Ln F_n(z) + 2 pi i k/n with
// F_n from the residue identity and the Ln branch tracked by continuity
// from the seed (saddle seed for k below ~n^{1/3}, curve seed beyond).
// Lower-half indices n/2 < k <= n-1 are solved as conjugates of n-k.
// The result is certified: |S(z)| <= 1e-12.
ZeroEstimate newton_solve(int n, int k);

// newton_solve over every k = 1 .. n-1, sorted by k, with a pairwise
// separation check (CollisionError if two indices land on one point).
std::vector<ZeroEstimate> newton_zero_set(int n);

struct ZeroMatching {
  std::vector<int> to_oracle;     // predicted[i] pairs with oracle[to_oracle[i]]
  std::vector<double> distance;   // |predicted[i] - oracle[to_oracle[i]]|
  double max_distance = 0.0;
  double oracle_min_gap = 0.0;    // min nearest-neighbor gap within oracle
};

// Greedy nearest-neighbor assignment with uniqueness; the predicted list
// may cover a subset of the oracle (e.g. the upper half plane only).
// AmbiguityError when any assignment distance exceeds half the minimal
// oracle nearest-neighbor gap.
ZeroMatching match_zeros(const std::vector<ZeroEstimate>& predicted,
                         const std::vector<ZeroEstimate>& oracle);

}  // namespace expsum

#endif  // EXPSUM_ZEROS_HPP
