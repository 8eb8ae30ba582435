#include "duval/hypersurface.hpp"

#include <algorithm>
#include <cmath>

#include "duval/errors.hpp"

namespace duval {

namespace {

Polynomial3 term(long coefficient, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return Polynomial3::monomial(coefficient, Exponent{a, b, c});
}

Complex ipow(Complex base, int exponent) {
  Complex result{1.0, 0.0};
  for (; exponent > 0; exponent >>= 1) {
    if (exponent & 1) result *= base;
    base *= base;
  }
  return result;
}

}  // namespace

HypersurfaceGerm duval_equation(DynkinType type, int n) {
  check_dynkin_range(type, n);
  const auto un = static_cast<std::uint32_t>(n);
  Polynomial3 f;
  switch (type) {
    case DynkinType::A: f = term(1, 0, 0, un + 1) - term(1, 1, 1, 0); break;
    case DynkinType::D: f = term(1, 2, 0, 0) + term(1, 0, 2, 1) + term(1, 0, 0, un - 1); break;
    case DynkinType::E:
      if (n == 6) f = term(1, 2, 0, 0) + term(1, 0, 3, 0) + term(1, 0, 0, 4);
      if (n == 7) f = term(1, 2, 0, 0) + term(1, 0, 3, 0) + term(1, 0, 1, 3);
      if (n == 8) f = term(1, 2, 0, 0) + term(1, 0, 3, 0) + term(1, 0, 0, 5);
      break;
  }
  HypersurfaceGerm germ{DynkinLabel{type, n}, f, f.differentiate(Variable::z)};
  const Point3 origin{};
  if (std::abs(germ.equation.evaluate(origin)) != 0.0 || !germ.equation.gradient_vanishes(origin, 0.0)) {
    throw std::logic_error("normal form of " + germ.label.to_string() + " is not singular at the origin");
  }
  return germ;
}

CoveringMap::CoveringMap(int n) : n_(n) {
  if (n < 1) throw ParameterError("covering map needs n >= 1");
}

Point3 CoveringMap::image(Complex s, Complex t) const {
  return {ipow(s, n_ + 1), ipow(t, n_ + 1), s * t};
}

double ambient_norm_squared_pullback(int n, double rho1, double rho2) {
  if (n < 1) throw ParameterError("n must be >= 1");
  if (!(rho1 >= 0.0) || !(rho2 >= 0.0) || !std::isfinite(rho1) || !std::isfinite(rho2)) {
    throw ParameterError("radii must be finite and non-negative");
  }
  const double power = 2.0 * n + 2.0;
  return std::pow(rho1, power) + std::pow(rho2, power) + rho1 * rho1 * rho2 * rho2;
}

double log_ambient_norm_squared_pullback(int n, double u1, double u2) {
  if (n < 1) throw ParameterError("n must be >= 1");
  if (!std::isfinite(u1) || !std::isfinite(u2)) throw ParameterError("log radii must be finite");
  const double power = 2.0 * n + 2.0;
  const double a = power * u1, b = power * u2, c = 2.0 * u1 + 2.0 * u2;
  const double m = std::max({a, b, c});
  return m + std::log(std::exp(a - m) + std::exp(b - m) + std::exp(c - m));
}

double pullback_residue_density(int n) {
  if (n < 0) throw ParameterError("n must be >= 0");
  const double degree = n + 1.0;
  return degree * degree;
}

}  // namespace duval
