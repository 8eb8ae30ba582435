#pragma once

// Integrals over the A_n covering plane pi(s,t) = (s^{n+1}, t^{n+1}, st).
//
// Everything is phase-averaged: with u_i = log|s|, log|t| the angular factor
// (2 pi)^2 is applied in closed form and the remaining 2-D integral is taken
// in the coordinates of kernels::cone_density,
//   L = log(|s|^{2n+2} + |t|^{2n+2} + |st|^2) = 2 log|zeta|,  v = L/(2n+2) - u1,
// which map the (u1, u2) plane onto L real, v > 0. A band on |zeta| is then a
// strip in L, and the v-integral is split at the cone edge s(L) = |L| (n-1) / (2(n+1)).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace duval {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t subregions_used = 0;
  /// Certified bound on the mass dropped by the finite domain.
  double truncation_bound = 0.0;

  friend bool operator==(const QuadratureResult&, const QuadratureResult&) = default;
};

/// Subregion budget exhausted before the tolerance was met.
class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadratureResult& partial() const noexcept { return partial_; }

 private:
  QuadratureResult partial_;
};

struct QuadratureSettings {
  unsigned workers = 1;
  /// Refinement stops once this many subregions are live. The initial
  /// partition (a few dozen rectangles) is always evaluated in full.
  std::size_t max_subregions = 400000;
};

inline constexpr int kMaxAnnulusLevel = 4;
inline constexpr double kMinRelTol = 1e-8;

/// Integration domain: log_inner < log|zeta| < log_outer, and v below
/// s(L) + tail_depth. The v-tail beyond tail_depth is the omitted mass.
struct LogPolarRegion {
  double log_inner;
  double log_outer;
  double tail_depth;
};

/// I_k = int over pi^{-1}(D_k) of dV / (F^2 log^2 F^2), F^2 = |s|^{2n+2} + |t|^{2n+2} + |st|^2.
/// Requires n >= 1, 1 <= k <= 4, kMinRelTol <= rel_tol < 1.
QuadratureResult integral_Ik(int n, int k, double rel_tol, const QuadratureSettings& settings = {});

/// Same integrand over the union of D_1..D_k_max, computed as one adaptive
/// integral. For k_max = 1 this reproduces integral_Ik(n, 1) bit for bit.
QuadratureResult dominating_integral(int n, int k_max, double rel_tol, const QuadratureSettings& settings = {});

/// int over pi^{-1}(X cap B_eps) of (n+1)^2 dV, i.e. (n+1) times the L^2 norm of
/// the structure form on X cap B_eps. Requires 0 < eps <= 1/2.
QuadratureResult structure_form_l2_norm(int n, double eps, double rel_tol, const QuadratureSettings& settings = {});

/// 4 I_k: the bound on ||dbar mu_k ^ omega||^2 from the cut-off gradient constant 2.
QuadratureResult weighted_graph_norm_defect(int n, int k, double rel_tol, const QuadratureSettings& settings = {});

/// Integral of (2 pi)^2 density / L^2 over an explicit region. Exposed for tests.
QuadratureResult band_integral(int n, const LogPolarRegion& region, double rel_tol,
                               const QuadratureSettings& settings = {});

}  // namespace duval
