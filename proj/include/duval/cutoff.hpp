#pragma once

namespace duval {

/// Shell D_k = {e^{-e^{k+1}} < |zeta| < e^{-e^k}} carrying the gradient of mu_k.
/// The log bounds are stored separately since `inner` underflows quickly in k.
struct Annulus {
  int k;
  double inner;
  double outer;
  double log_inner;  // -e^{k+1}
  double log_outer;  // -e^k
};

/// Throws ParameterError for k < 1.
Annulus annulus(int k);

/// Chain-rule constant in |d mu_k| <= C chi_k / (|zeta| |log |zeta||) for the
/// profiles below (|rho_k'| <= 3/2 and |r'| <= 1 in the regime r(x) = x).
inline constexpr double kGradientConstant = 2.0;

/// Cut-off mu_k(zeta) = rho_k(log(-log r(|zeta|))) as a function of the norm |zeta|.
///
/// rho_k(x) = 1 - s(x - k) with the clamped smoothstep s(t) = 3t^2 - 2t^3, and
/// r(x) = x on [0, 1/4], x - (x - 1/4)^2 on [1/4, 3/4], 1/2 beyond. Both are C^1.
/// The log-norm entry points are the primary API; direct-norm variants only
/// make sense while |zeta| is representable.
class CutoffProfile {
 public:
  explicit CutoffProfile(int k);

  int k() const noexcept { return k_; }
  const Annulus& shell() const noexcept { return shell_; }

  double rho(double x) const;
  double rho_derivative(double x) const;
  static double radius(double x);
  static double radius_derivative(double x);

  /// mu_k at |zeta| = norm > 0. Throws ParameterError for norm <= 0.
  double mu(double norm) const;
  double mu_log(double log_norm) const;

  /// Analytic d mu_k / d|zeta|.
  double mu_derivative(double norm) const;
  double mu_derivative_log(double log_norm) const;

  /// 2 / (|zeta| |log |zeta||) inside [inner, outer], 0 elsewhere. Requires 0 < norm <= 1/4.
  double gradient_bound(double norm) const;
  /// Log of gradient_bound; -inf outside the annulus. Requires log_norm <= log(1/4).
  double log_gradient_bound(double log_norm) const;

 private:
  double argument_log(double log_norm) const;

  int k_;
  Annulus shell_;
};

}  // namespace duval
