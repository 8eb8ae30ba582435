#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace duval {

struct Rect {
  double x0, x1, y0, y1;
};

/// Fills out[i] = f(xs[i], ys[i]). Called concurrently when workers > 1.
using BatchIntegrand =
    std::function<void(std::span<const double> xs, std::span<const double> ys, std::span<double> out)>;

struct CubatureOptions {
  double rel_tol = 1e-6;
  double abs_tol = 0.0;
  std::size_t max_regions = 400000;
  unsigned workers = 1;
};

struct CubatureOutcome {
  double value = 0.0;
  double error = 0.0;
  std::size_t regions = 0;
  bool converged = false;
};

/// Globally adaptive tensor Gauss-Kronrod (7/15 points per axis) cubature.
///
/// The region with the largest error estimate |K15xK15 - G7xG7| is bisected
/// along the axis whose lower-order rule disagrees more. Stops when the summed
/// error drops below max(abs_tol, rel_tol |value|) or the region budget runs
/// out (converged = false). With workers > 1 several regions are refined per
/// round in parallel; with one worker the result is bitwise reproducible.
/// Final sums use pairwise summation in region-creation order.
CubatureOutcome adaptive_cubature(const BatchIntegrand& f, std::span<const Rect> initial,
                                  const CubatureOptions& options);

/// One-dimensional globally adaptive Gauss-Kronrod 7/15.
CubatureOutcome adaptive_gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                                       double rel_tol, std::size_t max_intervals = 20000);

/// Pairwise (cascade) summation.
double pairwise_sum(std::span<const double> values);

}  // namespace duval
