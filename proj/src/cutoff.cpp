#include "duval/cutoff.hpp"

#include <cmath>
#include <limits>

#include "duval/errors.hpp"

namespace duval {

namespace {

const double kLogQuarter = std::log(0.25);

double smoothstep(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * (3.0 - 2.0 * t);
}

double smoothstep_derivative(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return 6.0 * t * (1.0 - t);
}

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) throw ParameterError(std::string(what) + " must be finite");
}

}  // namespace

Annulus annulus(int k) {
  if (k < 1) throw ParameterError("cut-off level k must be >= 1");
  Annulus a{};
  a.k = k;
  a.log_inner = -std::exp(static_cast<double>(k) + 1.0);
  a.log_outer = -std::exp(static_cast<double>(k));
  a.inner = std::exp(a.log_inner);
  a.outer = std::exp(a.log_outer);
  return a;
}

CutoffProfile::CutoffProfile(int k) : k_(k), shell_(annulus(k)) {}

double CutoffProfile::rho(double x) const { return 1.0 - smoothstep(x - k_); }

double CutoffProfile::rho_derivative(double x) const { return -smoothstep_derivative(x - k_); }

double CutoffProfile::radius(double x) {
  if (!(x >= 0.0)) throw ParameterError("r is defined on the non-negative reals");
  if (x <= 0.25) return x;
  if (x >= 0.75) return 0.5;
  const double t = x - 0.25;
  return x - t * t;
}

double CutoffProfile::radius_derivative(double x) {
  if (!(x >= 0.0)) throw ParameterError("r is defined on the non-negative reals");
  if (x <= 0.25) return 1.0;
  if (x >= 0.75) return 0.0;
  return 1.0 - 2.0 * (x - 0.25);
}

double CutoffProfile::argument_log(double log_norm) const {
  require_finite(log_norm, "log-norm");
  if (log_norm <= kLogQuarter) return std::log(-log_norm);
  return std::log(-std::log(radius(std::exp(log_norm))));
}

double CutoffProfile::mu(double norm) const {
  if (!(norm > 0.0)) throw ParameterError("mu_k is evaluated only at non-zero norms");
  return mu_log(std::log(norm));
}

double CutoffProfile::mu_log(double log_norm) const { return rho(argument_log(log_norm)); }

double CutoffProfile::mu_derivative(double norm) const {
  if (!(norm > 0.0)) throw ParameterError("mu_k is evaluated only at non-zero norms");
  return mu_derivative_log(std::log(norm));
}

double CutoffProfile::mu_derivative_log(double log_norm) const {
  const double slope = rho_derivative(argument_log(log_norm));
  if (slope == 0.0) return 0.0;
  if (log_norm <= kLogQuarter) {
    // d/dx log(-log x) = 1 / (x log x)
    return slope / (std::exp(log_norm) * log_norm);
  }
  const double x = std::exp(log_norm);
  const double r = radius(x);
  return slope * radius_derivative(x) / (r * std::log(r));
}

double CutoffProfile::gradient_bound(double norm) const {
  if (!(norm > 0.0) || norm > 0.25) throw ParameterError("gradient bound needs 0 < norm <= 1/4");
  const double log_norm = std::log(norm);
  if (log_norm < shell_.log_inner || log_norm > shell_.log_outer) return 0.0;
  return kGradientConstant / (norm * std::fabs(log_norm));
}

double CutoffProfile::log_gradient_bound(double log_norm) const {
  require_finite(log_norm, "log-norm");
  if (log_norm > kLogQuarter) throw ParameterError("gradient bound needs norm <= 1/4");
  if (log_norm < shell_.log_inner || log_norm > shell_.log_outer) {
    return -std::numeric_limits<double>::infinity();
  }
  return std::log(kGradientConstant) - log_norm - std::log(-log_norm);
}

}  // namespace duval
