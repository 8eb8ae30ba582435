#include "duval/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <sstream>

#include "duval/cubature.hpp"
#include "duval/cutoff.hpp"
#include "duval/errors.hpp"
#include "duval/kernels.hpp"

namespace duval {

namespace {

constexpr double kPhase = 4.0 * std::numbers::pi * std::numbers::pi;
constexpr int kPiecesPerAnnulus = 4;
constexpr int kMaxTailRetries = 6;

enum class Weight { inverse_log_square, structure_form };

void check_common(int n, double rel_tol) {
  if (n < 1) throw ParameterError("A_n index must be >= 1, got " + std::to_string(n));
  if (!(rel_tol >= kMinRelTol && rel_tol < 1.0)) {
    std::ostringstream os;
    os << "rel_tol must lie in [" << kMinRelTol << ", 1), got " << rel_tol;
    throw ParameterError(os.str());
  }
}

void check_level(int k, const char* what) {
  if (k < 1 || k > kMaxAnnulusLevel) {
    throw ParameterError(std::string(what) + " must lie in [1, " + std::to_string(kMaxAnnulusLevel) +
                         "], got " + std::to_string(k));
  }
}

double cone_edge(int n, double L) { return std::fabs(L) * (n - 1.0) / (2.0 * (n + 1.0)); }

// Integrand in (L, y): y in (0, 1) is the cone v = s(L) y, y > 1 is v = s(L) + (y - 1).
struct BandIntegrand {
  int n;
  Weight weight;
  double L_lo;
  double L_hi;

  void operator()(std::span<const double> xs, std::span<const double> ys, std::span<double> out) const {
    const std::size_t count = xs.size();
    std::vector<double> v(count), jac(count), q(count), density(count);
    for (std::size_t i = 0; i < count; ++i) {
      const double s = cone_edge(n, xs[i]);
      if (ys[i] < 1.0) {
        v[i] = s * ys[i];
        jac[i] = s;
      } else {
        v[i] = s + (ys[i] - 1.0);
        jac[i] = 1.0;
      }
    }
    kernels::cone_density(n, xs, v, q, density);
    check_band(xs, v, q);
    for (std::size_t i = 0; i < count; ++i) {
      const double L = xs[i];
      const double w = weight == Weight::inverse_log_square ? 1.0 / (L * L) : std::exp(L);
      out[i] = jac[i] > 0.0 ? w * jac[i] * density[i] : 0.0;
    }
  }

  // Maps each node back to (u1, u2) and recomputes L from scratch.
  void check_band(std::span<const double> L, std::span<const double> v, std::span<const double> q) const {
    const std::size_t count = L.size();
    const double m = 2.0 * n + 2.0;
    std::vector<double> a(count), b(count), c(count), back(count);
    for (std::size_t i = 0; i < count; ++i) {
      if (!(v[i] > 0.0)) {
        a[i] = b[i] = c[i] = L[i];
        continue;
      }
      const double u1 = L[i] / m - v[i];
      const double u2 = (q[i] + 2.0 * u1) / (2.0 * n);
      a[i] = m * u1;
      b[i] = m * u2;
      c[i] = 2.0 * u1 + 2.0 * u2;
    }
    kernels::log_sum_exp3(a, b, c, back);
    for (std::size_t i = 0; i < count; ++i) {
      if (!(v[i] > 0.0)) continue;
      const bool inside = L[i] > L_lo && L[i] < L_hi;
      const bool consistent = std::fabs(back[i] - L[i]) <= 1e-8 * std::max(1.0, std::fabs(L[i]));
      if (!inside || !consistent) {
        std::ostringstream os;
        os.precision(17);
        os << "quadrature node outside the band: L=" << L[i] << " recomputed " << back[i] << " band (" << L_lo
           << ", " << L_hi << ")";
        throw std::logic_error(os.str());
      }
    }
  }
};

std::vector<Rect> initial_rects(int n, std::span<const double> breaks, int pieces, double depth) {
  std::vector<double> ys;
  if (n >= 2) ys = {0.0, 0.5, 1.0};
  else ys = {1.0};
  for (double y : {2.0, 4.0}) ys.push_back(y);
  ys.push_back(1.0 + depth);

  std::vector<Rect> rects;
  for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
    const double width = (breaks[j + 1] - breaks[j]) / pieces;
    for (int p = 0; p < pieces; ++p) {
      const double x0 = breaks[j] + p * width;
      const double x1 = p + 1 == pieces ? breaks[j + 1] : x0 + width;
      for (std::size_t i = 0; i + 1 < ys.size(); ++i) rects.push_back(Rect{x0, x1, ys[i], ys[i + 1]});
    }
  }
  return rects;
}

// e^{-2D} / (m (1 - e^{-m D})): bound on the v-tail beyond s(L) + D per unit weight.
double v_tail_factor(int n, double depth) {
  const double m = 2.0 * n + 2.0;
  return std::exp(-2.0 * depth) / (m * -std::expm1(-m * depth));
}

double initial_depth(double rel_tol) { return std::max(4.0, 0.5 * std::log(1e3 / rel_tol)); }

QuadratureResult run(const BandIntegrand& f, const std::vector<Rect>& rects, double rel_tol, double scale,
                     const QuadratureSettings& settings) {
  CubatureOptions options;
  options.rel_tol = rel_tol;
  options.max_regions = settings.max_subregions;
  options.workers = settings.workers;
  const CubatureOutcome outcome = adaptive_cubature(f, rects, options);
  QuadratureResult result{scale * outcome.value, scale * outcome.error, outcome.regions, 0.0};
  if (!outcome.converged) {
    std::ostringstream os;
    os << "subregion budget of " << settings.max_subregions << " exhausted at relative error "
       << outcome.error / std::max(outcome.value, 1e-300);
    throw BudgetExceededError(os.str(), result);
  }
  return result;
}

// Integral of (2 pi)^2 density / L^2 over L in (breaks.front(), breaks.back()).
QuadratureResult inverse_log_square(int n, std::span<const double> breaks, double depth, double rel_tol,
                                    const QuadratureSettings& settings) {
  const double lo = breaks.front(), hi = breaks.back();
  const BandIntegrand f{n, Weight::inverse_log_square, lo, hi};
  for (int attempt = 0;; ++attempt) {
    QuadratureResult r = run(f, initial_rects(n, breaks, kPiecesPerAnnulus, depth), rel_tol, kPhase, settings);
    r.truncation_bound = kPhase * v_tail_factor(n, depth) * (1.0 / std::fabs(hi) - 1.0 / std::fabs(lo));
    if (r.truncation_bound <= rel_tol * r.value / 10.0 || attempt == kMaxTailRetries) return r;
    depth += 2.0;
  }
}

std::vector<double> annulus_breaks(int k_max) {
  std::vector<double> breaks;
  for (int k = k_max; k >= 1; --k) breaks.push_back(2.0 * annulus(k).log_inner);
  breaks.push_back(2.0 * annulus(1).log_outer);
  return breaks;
}

}  // namespace

QuadratureResult band_integral(int n, const LogPolarRegion& region, double rel_tol,
                               const QuadratureSettings& settings) {
  check_common(n, rel_tol);
  if (!(region.log_inner < region.log_outer && region.log_outer < 0.0) || !std::isfinite(region.log_inner)) {
    throw ParameterError("band needs finite log_inner < log_outer < 0");
  }
  if (!(region.tail_depth > 0.0 && std::isfinite(region.tail_depth))) {
    throw ParameterError("tail_depth must be positive and finite");
  }
  const std::array<double, 2> breaks{2.0 * region.log_inner, 2.0 * region.log_outer};
  const BandIntegrand f{n, Weight::inverse_log_square, breaks[0], breaks[1]};
  QuadratureResult r =
      run(f, initial_rects(n, breaks, kPiecesPerAnnulus, region.tail_depth), rel_tol, kPhase, settings);
  r.truncation_bound =
      kPhase * v_tail_factor(n, region.tail_depth) * (1.0 / std::fabs(breaks[1]) - 1.0 / std::fabs(breaks[0]));
  return r;
}

QuadratureResult integral_Ik(int n, int k, double rel_tol, const QuadratureSettings& settings) {
  check_common(n, rel_tol);
  check_level(k, "annulus level k");
  const Annulus shell = annulus(k);
  const std::array<double, 2> breaks{2.0 * shell.log_inner, 2.0 * shell.log_outer};
  return inverse_log_square(n, breaks, initial_depth(rel_tol), rel_tol, settings);
}

QuadratureResult dominating_integral(int n, int k_max, double rel_tol, const QuadratureSettings& settings) {
  check_common(n, rel_tol);
  check_level(k_max, "k_max");
  const std::vector<double> breaks = annulus_breaks(k_max);
  return inverse_log_square(n, breaks, initial_depth(rel_tol), rel_tol, settings);
}

QuadratureResult weighted_graph_norm_defect(int n, int k, double rel_tol, const QuadratureSettings& settings) {
  const double c2 = kGradientConstant * kGradientConstant;
  QuadratureResult r = integral_Ik(n, k, rel_tol, settings);
  r.value *= c2;
  r.error_estimate *= c2;
  r.truncation_bound *= c2;
  return r;
}

QuadratureResult structure_form_l2_norm(int n, double eps, double rel_tol, const QuadratureSettings& settings) {
  check_common(n, rel_tol);
  if (!(eps > 0.0 && eps <= 0.5)) {
    std::ostringstream os;
    os << "eps must lie in (0, 1/2], got " << eps;
    throw ParameterError(os.str());
  }
  const double hi = 2.0 * std::log(eps);
  const double slope = (n - 1.0) / (4.0 * (n + 1.0));
  const double scale = kPhase * (n + 1.0);
  double span = std::log(1e3 / rel_tol) + 4.0;
  double depth = initial_depth(rel_tol);
  for (int attempt = 0;; ++attempt) {
    const double lo = hi - span;
    const int pieces = std::max(1, static_cast<int>(std::ceil(span / 2.0)));
    const std::array<double, 2> breaks{lo, hi};
    const BandIntegrand f{n, Weight::structure_form, lo, hi};
    QuadratureResult r = run(f, initial_rects(n, breaks, pieces, depth), rel_tol, scale, settings);
    // Below lo the v-integral of the density is at most s(L)/2 + 1.
    const double l_tail = scale * std::exp(lo) * (slope * (1.0 + std::fabs(lo)) + 1.0);
    const double v_tail = scale * (std::exp(hi) - std::exp(lo)) * v_tail_factor(n, depth);
    r.truncation_bound = l_tail + v_tail;
    if (r.truncation_bound <= rel_tol * r.value / 10.0 || attempt == kMaxTailRetries) return r;
    span += 4.0;
    depth += 2.0;
  }
}

}  // namespace duval
