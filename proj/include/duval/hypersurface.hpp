#pragma once

#include <array>

#include "duval/dual_graph.hpp"
#include "duval/polynomial.hpp"

namespace duval {

/// du Val germ {f = 0} in C^3 with its Poincare residue dx^dy / (df/dz).
///
/// Normal forms:
///   A_n: z^{n+1} - x y        D_n: x^2 + y^2 z + z^{n-1}
///   E_6: x^2 + y^3 + z^4      E_7: x^2 + y^3 + y z^3      E_8: x^2 + y^3 + z^5
struct HypersurfaceGerm {
  DynkinLabel label;
  Polynomial3 equation;
  Polynomial3 residue_denominator;
};

/// Throws ParameterError for indices outside the ADE ranges.
HypersurfaceGerm duval_equation(DynkinType type, int n);

/// Branched (n+1):1 covering C^2 -> {z^{n+1} = xy}, (s, t) -> (s^{n+1}, t^{n+1}, st).
class CoveringMap {
 public:
  explicit CoveringMap(int n);
  int n() const noexcept { return n_; }
  int degree() const noexcept { return n_ + 1; }
  Point3 image(Complex s, Complex t) const;

 private:
  int n_;
};

/// rho1^{2n+2} + rho2^{2n+2} + rho1^2 rho2^2, i.e. |pi(s,t)|^2 with |s| = rho1, |t| = rho2.
double ambient_norm_squared_pullback(int n, double rho1, double rho2);
/// Log-space form: arguments u_i = log rho_i, returns log of the above.
double log_ambient_norm_squared_pullback(int n, double u1, double u2);

/// (n+1)^2: density of pi^*omega ^ conj(pi^*omega) against Euclidean volume,
/// since pi^*omega = (n+1) ds^dt. Accepts n >= 0 (n = 0 is the identity covering).
double pullback_residue_density(int n);

}  // namespace duval
