#pragma once

// Shared constants of the cone-density Newton solve; both kernel variants
// must iterate the same map so their results agree to rounding.

namespace duval::kernels::detail {

inline constexpr int kMaxNewtonIterations = 100;
inline constexpr double kNewtonRelativeStep = 1e-15;

/// Right-hand side c of q/n + softplus(q) = c, given log(1 - e^{-m v}).
inline double cone_rhs(int n, double L, double v, double log_one_minus) {
  const double nd = n;
  return L * (nd - 1.0) / nd + 2.0 * v * (nd + 1.0) / nd + log_one_minus;
}

/// Start to the right of the root: h is convex increasing with
/// h(q) >= q/n and h(q) >= q (n+1)/n, so min(n c, n c/(n+1)) >= root.
inline double cone_start(int n, double c) {
  const double nd = n;
  const double a = nd * c, b = nd * c / (nd + 1.0);
  return a < b ? a : b;
}

}  // namespace duval::kernels::detail
