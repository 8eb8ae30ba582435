#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "duval/cubature.hpp"

using namespace duval;

namespace {

BatchIntegrand pointwise(double (*f)(double, double)) {
  return [f](std::span<const double> xs, std::span<const double> ys, std::span<double> out) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i], ys[i]);
  };
}

}  // namespace

TEST_CASE("tensor rule is exact on low-degree polynomials") {
  const std::vector<Rect> unit{{0.0, 1.0, 0.0, 1.0}};
  CubatureOptions options;
  options.rel_tol = 1e-14;
  const auto r = adaptive_cubature(pointwise([](double x, double y) { return std::pow(x, 12) * std::pow(y, 9); }),
                                   unit, options);
  CHECK(r.converged);
  CHECK(r.regions == 1);
  CHECK(r.value == doctest::Approx(1.0 / 130.0).epsilon(1e-15));
}

TEST_CASE("adaptive refinement on peaked and kinked integrands") {
  CubatureOptions options;
  options.rel_tol = 1e-10;
  const std::vector<Rect> box{{-1.0, 1.0, -1.0, 1.0}};
  const auto peak = adaptive_cubature(
      pointwise([](double x, double y) { return std::exp(-100.0 * (x * x + y * y)); }), box, options);
  CHECK(peak.converged);
  const double exact = std::numbers::pi / 100.0 * std::pow(std::erf(10.0), 2);
  CHECK(std::fabs(peak.value - exact) <= 1e-9 * exact);

  const auto kink = adaptive_cubature(pointwise([](double x, double y) { return std::fabs(x - 0.3) + y * y; }),
                                      box, options);
  CHECK(kink.converged);
  CHECK(kink.value == doctest::Approx(2.0 * (1.69 / 2.0 + 0.49 / 2.0) + 4.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("budget exhaustion is reported") {
  CubatureOptions options;
  options.rel_tol = 1e-14;
  options.max_regions = 8;
  const std::vector<Rect> box{{0.0, 1.0, 0.0, 1.0}};
  const auto r = adaptive_cubature(pointwise([](double x, double y) { return std::sqrt(x + y); }), box, options);
  CHECK_FALSE(r.converged);
  CHECK(r.regions <= 8);
}

TEST_CASE("parallel refinement agrees within the error estimate") {
  CubatureOptions serial;
  serial.rel_tol = 1e-9;
  CubatureOptions parallel = serial;
  parallel.workers = 4;
  const std::vector<Rect> box{{-1.0, 1.0, -1.0, 1.0}};
  auto f = pointwise([](double x, double y) { return 1.0 / (0.01 + x * x + y * y); });
  const auto a = adaptive_cubature(f, box, serial);
  const auto b = adaptive_cubature(f, box, serial);
  const auto c = adaptive_cubature(f, box, parallel);
  CHECK(a.value == b.value);
  CHECK(a.error == b.error);
  CHECK(std::fabs(a.value - c.value) <= a.error + c.error);
}

TEST_CASE("one-dimensional Gauss-Kronrod") {
  const auto r = adaptive_gauss_kronrod([](double x) { return std::log(x); }, 1e-12, 1.0, 1e-12);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-10));
  const auto s = adaptive_gauss_kronrod([](double x) { return std::cos(x); }, 0.0, 10.0, 1e-13);
  CHECK(std::fabs(s.value - std::sin(10.0)) <= 1e-13);
}

TEST_CASE("pairwise summation") {
  std::vector<double> ones(1 << 20, 0.1);
  CHECK(std::fabs(pairwise_sum(ones) - 0.1 * (1 << 20)) <= 1e-9);
  CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
}
