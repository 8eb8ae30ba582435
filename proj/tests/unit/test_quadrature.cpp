#include <doctest.h>

#include <cmath>

#include "../oracles/oracles.hpp"
#include "duval/cubature.hpp"
#include "duval/cutoff.hpp"
#include "duval/errors.hpp"
#include "duval/kernels.hpp"
#include "duval/quadrature.hpp"

using namespace duval;

namespace {

double lse_single(double a, double b, double c) {
  double out = 0.0;
  kernels::log_sum_exp3(std::span<const double>(&a, 1), std::span<const double>(&b, 1),
                        std::span<const double>(&c, 1), std::span<double>(&out, 1));
  return out;
}

// Diagonal u1 = u2 = w: L(w) = log(2 e^{m w} + e^{4w}), increasing in w.
double diagonal_L(int n, double w) {
  const double m = 2.0 * n + 2.0;
  return lse_single(m * w, m * w, 4.0 * w);
}

double diagonal_root(int n, double target) {
  double lo = target, hi = 0.0;  // L(w) >= 4w and L(0) = log 3
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (diagonal_L(n, mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("n = 1 annulus integrals match the closed form") {
  for (int k = 1; k <= 4; ++k) {
    const auto r = integral_Ik(1, k, 1e-6);
    const double exact = oracle::closed_form_Ik_n1(k);
    CAPTURE(k);
    CHECK(r.value > 0.0);
    CHECK(r.error_estimate >= 0.0);
    CHECK(r.truncation_bound >= 0.0);
    CHECK(r.truncation_bound <= 1e-7 * r.value);
    CHECK(std::fabs(r.value - exact) <= r.error_estimate + r.truncation_bound);
    CHECK(std::fabs(r.value - exact) <= 1e-6 * exact);
  }
}

TEST_CASE("n >= 2 annulus integrals approach (2pi)^2 (n-1) / (4(n+1))") {
  for (int n = 2; n <= 4; ++n) {
    const auto r = integral_Ik(n, 4, 1e-8);
    CHECK(std::fabs(r.value - oracle::limit_Ik(n)) <= 1e-7 * oracle::limit_Ik(n));
  }
}

TEST_CASE("diagonal drill: 1-D routine reproduces the substitution closed form") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 4; ++k) {
      const Annulus a = annulus(k);
      const double lo = 2.0 * a.log_inner, hi = 2.0 * a.log_outer;
      const double w0 = diagonal_root(n, lo), w1 = diagonal_root(n, hi);
      const double exact = 1.0 / std::fabs(hi) - 1.0 / std::fabs(lo);
      // d/dw (-1/L) = L'/L^2 with L' = (2 m e^{m w} + 4 e^{4w}) / e^L
      const double m = 2.0 * n + 2.0;
      const auto r = adaptive_gauss_kronrod(
          [&](double w) {
            const double L = diagonal_L(n, w);
            const double slope = 2.0 * m * std::exp(m * w - L) + 4.0 * std::exp(4.0 * w - L);
            return slope / (L * L);
          },
          w0, w1, 1e-12);
      CHECK(std::fabs(r.value - exact) <= 1e-8 * exact);
    }
  }
  // n = 1: e^{4w - L} = 1/3 on the diagonal, so the band integrand integrates to (1/12)(1/|hi| - 1/|lo|).
  for (int k = 1; k <= 4; ++k) {
    const Annulus a = annulus(k);
    const double lo = 2.0 * a.log_inner, hi = 2.0 * a.log_outer;
    const auto r = adaptive_gauss_kronrod(
        [](double w) {
          const double L = diagonal_L(1, w);
          return std::exp(4.0 * w - L) / (L * L);
        },
        (lo - std::log(3.0)) / 4.0, (hi - std::log(3.0)) / 4.0, 1e-12);
    const double exact = (1.0 / 12.0) * (1.0 / std::fabs(hi) - 1.0 / std::fabs(lo));
    CHECK(std::fabs(r.value - exact) <= 1e-8 * exact);
  }
}

TEST_CASE("dominating integral") {
  const auto single = integral_Ik(1, 1, 1e-5);
  const auto dom1 = dominating_integral(1, 1, 1e-5);
  CHECK(dom1 == single);

  double sum = 0.0, err = 0.0;
  for (int k = 1; k <= 4; ++k) {
    const auto r = integral_Ik(1, k, 1e-6);
    sum += r.value;
    err += r.error_estimate;
  }
  const auto dom4 = dominating_integral(1, 4, 1e-6);
  CHECK(std::fabs(dom4.value - sum) <= dom4.error_estimate + err);

  std::vector<double> partial;
  for (int kmax = 1; kmax <= 4; ++kmax) partial.push_back(dominating_integral(1, kmax, 1e-7).value);
  CHECK(partial[3] - partial[2] < partial[1] - partial[0]);
  CHECK(partial[2] - partial[1] < partial[1] - partial[0]);

  for (int n = 2; n <= 3; ++n) {
    const auto d = dominating_integral(n, 3, 1e-6);
    double s = 0.0, e = 0.0;
    for (int k = 1; k <= 3; ++k) {
      const auto r = integral_Ik(n, k, 1e-6);
      s += r.value;
      e += r.error_estimate;
    }
    CHECK(std::fabs(d.value - s) <= d.error_estimate + e);
  }
}

TEST_CASE("weighted graph norm defect is 4 I_k") {
  const auto r = integral_Ik(1, 1, 1e-5);
  const auto d = weighted_graph_norm_defect(1, 1, 1e-5);
  CHECK(d.value == 4.0 * r.value);
  CHECK(weighted_graph_norm_defect(2, 3, 1e-8).value <= weighted_graph_norm_defect(2, 2, 1e-8).value);
  for (int k = 1; k <= 4; ++k) CHECK(weighted_graph_norm_defect(1, k, 1e-4).value <= 4.0 * r.value * 1.01);
}

TEST_CASE("structure form norm") {
  for (double eps : {0.05, 0.1, 0.2, 0.5}) {
    const auto r = structure_form_l2_norm(1, eps, 1e-7);
    const double exact = oracle::closed_form_structure_n1(eps);
    CHECK(std::fabs(r.value - exact) <= r.error_estimate + r.truncation_bound);
    CHECK(std::fabs(r.value - exact) <= 1e-7 * exact);
    CHECK(r.truncation_bound <= 1e-8 * r.value);
  }
  for (int n = 1; n <= 3; ++n) {
    double previous = 0.0;
    for (double eps : {0.01, 0.05, 0.1, 0.2, 0.3, 0.5}) {
      const auto r = structure_form_l2_norm(n, eps, 1e-6);
      CHECK(std::isfinite(r.value));
      CHECK(r.value > previous);
      previous = r.value;
    }
  }
}

TEST_CASE("self-convergence under tolerance halving") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 3; ++k) {
      for (double tol : {1e-4, 1e-6}) {
        const auto coarse = integral_Ik(n, k, tol), fine = integral_Ik(n, k, tol / 2.0);
        CHECK(std::fabs(coarse.value - fine.value) < coarse.error_estimate + 1e-300);
        const auto dc = dominating_integral(n, k, tol), df = dominating_integral(n, k, tol / 2.0);
        CHECK(std::fabs(dc.value - df.value) < dc.error_estimate + 1e-300);
      }
    }
    const auto sc = structure_form_l2_norm(n, 0.1, 1e-5), sf = structure_form_l2_norm(n, 0.1, 5e-6);
    CHECK(std::fabs(sc.value - sf.value) < sc.error_estimate);
  }
}

TEST_CASE("Monte Carlo cross-check (10^6 samples)") {
  for (int k = 1; k <= 2; ++k) {
    const Annulus a = annulus(k);
    const auto mc = oracle::monte_carlo_Ik(1, 2.0 * a.log_inner, 2.0 * a.log_outer, 1000000, 100 + k);
    const auto q = integral_Ik(1, k, 1e-5);
    CHECK(std::fabs(mc.value - q.value) <= 3.0 * std::hypot(mc.std_error, q.error_estimate));
  }
  const auto mc = oracle::monte_carlo_structure_form(1, 0.1, 1000000, 7);
  const auto q = structure_form_l2_norm(1, 0.1, 1e-5);
  CHECK(std::fabs(mc.value - q.value) <= 3.0 * std::hypot(mc.std_error, q.error_estimate));
}

TEST_CASE("workers and reproducibility") {
  const auto a = integral_Ik(2, 2, 1e-7);
  const auto b = integral_Ik(2, 2, 1e-7);
  CHECK(a == b);
  QuadratureSettings parallel;
  parallel.workers = 4;
  const auto c = integral_Ik(2, 2, 1e-7, parallel);
  CHECK(std::fabs(a.value - c.value) <= a.error_estimate + c.error_estimate);
}

TEST_CASE("scalar and vector kernels give the same integrals within error") {
  if (!kernels::isa_available(kernels::Isa::avx2)) return;
  const kernels::Isa before = kernels::active_isa();
  kernels::set_active_isa(kernels::Isa::scalar);
  const auto s = integral_Ik(3, 2, 1e-6);
  kernels::set_active_isa(kernels::Isa::avx2);
  const auto v = integral_Ik(3, 2, 1e-6);
  kernels::set_active_isa(before);
  CHECK(std::fabs(s.value - v.value) <= 1e-12 * s.value + s.error_estimate);
}

TEST_CASE("explicit band region") {
  const Annulus a = annulus(1);
  const auto r = band_integral(1, LogPolarRegion{a.log_inner, a.log_outer, 10.0}, 1e-8);
  CHECK(std::fabs(r.value - oracle::closed_form_Ik_n1(1)) <= 1e-8 * r.value + r.truncation_bound);
  CHECK_THROWS_AS(band_integral(1, LogPolarRegion{-1.0, -2.0, 10.0}, 1e-6), ParameterError);
  CHECK_THROWS_AS(band_integral(1, LogPolarRegion{-2.0, -1.0, 0.0}, 1e-6), ParameterError);
}

TEST_CASE("preconditions and budget") {
  CHECK_THROWS_AS(integral_Ik(1, 5, 1e-4), ParameterError);
  CHECK_THROWS_AS(integral_Ik(1, 0, 1e-4), ParameterError);
  CHECK_THROWS_AS(integral_Ik(0, 1, 1e-4), ParameterError);
  CHECK_THROWS_AS(integral_Ik(1, 1, 1e-9), ParameterError);
  CHECK_THROWS_AS(dominating_integral(1, 5, 1e-4), ParameterError);
  CHECK_THROWS_AS(structure_form_l2_norm(1, 0.6, 1e-4), ParameterError);
  CHECK_THROWS_AS(structure_form_l2_norm(1, 0.0, 1e-4), ParameterError);
  QuadratureSettings tiny;
  tiny.max_subregions = 24;
  try {
    integral_Ik(3, 3, 1e-8, tiny);
    FAIL("expected BudgetExceededError");
  } catch (const BudgetExceededError& e) {
    CHECK(e.partial().value > 0.0);
    CHECK(e.partial().subregions_used <= 24);
  }
}
