#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace oracle {

namespace {

constexpr double kPhase = 4.0 * std::numbers::pi * std::numbers::pi;

template <class F>
McEstimate sample_box(double lo_u, double hi_u, std::size_t samples, std::uint64_t seed, F&& f) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(lo_u, hi_u);
  const double area = (hi_u - lo_u) * (hi_u - lo_u);
  // Welford accumulation of the sample mean and variance.
  double mean = 0.0, m2 = 0.0;
  for (std::size_t i = 1; i <= samples; ++i) {
    const double u1 = u(rng), u2 = u(rng);
    const double y = f(u1, u2);
    const double delta = y - mean;
    mean += delta / static_cast<double>(i);
    m2 += delta * (y - mean);
  }
  const double variance = m2 / static_cast<double>(samples - 1);
  return {area * mean, area * std::sqrt(variance / static_cast<double>(samples))};
}

}  // namespace

cpp_int subset_determinant(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  if (n > 20) throw std::invalid_argument("subset_determinant: matrix too large");
  for (const auto& r : rows) {
    if (r.size() != n) throw std::invalid_argument("subset_determinant: not square");
  }
  // dp[mask]: signed sum over placements of rows 0..|mask|-1 into the columns of mask.
  std::vector<cpp_int> dp(std::size_t{1} << n);
  dp[0] = 1;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask] == 0) continue;
    const std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    if (row == n) continue;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      if (rows[row][col] == 0) continue;
      // Inversions added: chosen columns greater than col.
      const int above = std::popcount(mask >> (col + 1));
      cpp_int term = dp[mask] * rows[row][col];
      if (above % 2) term = -term;
      dp[mask | (std::size_t{1} << col)] += term;
    }
  }
  return dp.back();
}

double reference_lse3(double a, double b, double c) {
  const double m = std::max({a, b, c});
  return m + std::log(std::exp(a - m) + std::exp(b - m) + std::exp(c - m));
}

McEstimate monte_carlo_Ik(int n, double lo, double hi, std::size_t samples, std::uint64_t seed, double depth) {
  const double m = 2.0 * n + 2.0;
  const double lo_u = lo / 2.0 - lo / m - depth, hi_u = hi / m;
  return sample_box(lo_u, hi_u, samples, seed, [&](double u1, double u2) {
    const double L = reference_lse3(m * u1, m * u2, 2.0 * u1 + 2.0 * u2);
    if (!(L > lo && L < hi)) return 0.0;
    return kPhase * std::exp(2.0 * u1 + 2.0 * u2 - L) / (L * L);
  });
}

McEstimate monte_carlo_structure_form(int n, double eps, std::size_t samples, std::uint64_t seed, double depth) {
  const double m = 2.0 * n + 2.0;
  const double top = 2.0 * std::log(eps);
  const double lo_u = top / 2.0 - top / m - depth, hi_u = top / m;
  return sample_box(lo_u, hi_u, samples, seed, [&](double u1, double u2) {
    const double L = reference_lse3(m * u1, m * u2, 2.0 * u1 + 2.0 * u2);
    if (!(L < top)) return 0.0;
    return kPhase * (n + 1.0) * std::exp(2.0 * u1 + 2.0 * u2);
  });
}

double closed_form_Ik_n1(int k) {
  const double pi = std::numbers::pi;
  return kPhase * pi / (3.0 * std::sqrt(3.0)) * (1.0 - std::exp(-1.0)) / (8.0 * std::exp(static_cast<double>(k)));
}

double limit_Ik(int n) { return kPhase * (n - 1.0) / (4.0 * (n + 1.0)); }

double closed_form_structure_n1(double eps) {
  return 2.0 * kPhase * eps * eps * std::numbers::pi / (12.0 * std::sqrt(3.0));
}

}  // namespace oracle
