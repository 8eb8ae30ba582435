#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cone_solve.hpp"
#include "duval/kernels.hpp"

namespace duval::kernels::scalar {

namespace {

void require_same_size(std::size_t expected, std::size_t actual) {
  if (expected != actual) throw std::invalid_argument("kernel spans differ in length");
}

double solve_q(int n, double c) {
  const double inv_n = 1.0 / n;
  double q = detail::cone_start(n, c);
  for (int it = 0; it < detail::kMaxNewtonIterations; ++it) {
    const double e = std::exp(-std::fabs(q));
    const double softplus = std::max(q, 0.0) + std::log1p(e);
    const double sigmoid = q >= 0.0 ? 1.0 / (1.0 + e) : e / (1.0 + e);
    const double step = (q * inv_n + softplus - c) / (inv_n + sigmoid);
    q -= step;
    if (std::fabs(step) <= detail::kNewtonRelativeStep * std::max(1.0, std::fabs(q))) break;
  }
  return q;
}

}  // namespace

void log_sum_exp3(std::span<const double> a, std::span<const double> b, std::span<const double> c,
                  std::span<double> out) {
  require_same_size(a.size(), b.size());
  require_same_size(a.size(), c.size());
  require_same_size(a.size(), out.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double m = std::max({a[i], b[i], c[i]});
    if (m == -std::numeric_limits<double>::infinity()) {
      out[i] = m;
      continue;
    }
    out[i] = m + std::log(std::exp(a[i] - m) + std::exp(b[i] - m) + std::exp(c[i] - m));
  }
}

void cone_density(int n, std::span<const double> L, std::span<const double> v, std::span<double> q,
                  std::span<double> density) {
  require_same_size(L.size(), v.size());
  require_same_size(L.size(), q.size());
  require_same_size(L.size(), density.size());
  if (n < 1) throw std::invalid_argument("cone_density needs n >= 1");
  const double m = 2.0 * n + 2.0;
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (!(v[i] > 0.0)) {
      q[i] = -std::numeric_limits<double>::infinity();
      density[i] = 0.5;
      continue;
    }
    const double c = detail::cone_rhs(n, L[i], v[i], std::log(-std::expm1(-m * v[i])));
    q[i] = solve_q(n, c);
    density[i] = 1.0 / (2.0 + m * std::exp(q[i]));
  }
}

}  // namespace duval::kernels::scalar
