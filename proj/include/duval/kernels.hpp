#pragma once

// Batched inner loops of the quadrature. Every kernel has a scalar reference
// implementation and, when built, an AVX2+FMA variant; `active_isa()` picks
// one at first use from the CPU features. DUVAL_ISA=scalar|avx2 in the
// environment overrides the choice.

#include <span>
#include <string_view>

namespace duval::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
/// Whether the AVX2 variant was compiled in and the CPU supports AVX2 and FMA.
bool isa_available(Isa isa);
Isa active_isa();
/// Switches the dispatcher (tests and benchmarks). Throws if unavailable.
void set_active_isa(Isa isa);

/// out[i] = log(exp(a[i]) + exp(b[i]) + exp(c[i])) without overflow or underflow.
void log_sum_exp3(std::span<const double> a, std::span<const double> b, std::span<const double> c,
                  std::span<double> out);

/// Band coordinates for the A_n covering plane.
///
/// With m = 2n+2, a point (u1, u2) = (log|s|, log|t|) is addressed by
/// L = log(e^{m u1} + e^{m u2} + e^{2u1+2u2}) and v = L/m - u1 > 0. The kernel
/// solves for q = log(e^{m u2} / e^{2u1+2u2}) = 2n u2 - 2 u1, i.e. the root of
///   q/n + log(1 + e^q) = L (n-1)/n + 2v (n+1)/n + log(1 - e^{-m v}),
/// and returns density = 1 / (2 + m e^q), which is
/// e^{2u1+2u2-L} |d(u1,u2)/d(L,v)|.
void cone_density(int n, std::span<const double> L, std::span<const double> v, std::span<double> q,
                  std::span<double> density);

namespace scalar {
void log_sum_exp3(std::span<const double> a, std::span<const double> b, std::span<const double> c,
                  std::span<double> out);
void cone_density(int n, std::span<const double> L, std::span<const double> v, std::span<double> q,
                  std::span<double> density);
}  // namespace scalar

#ifdef DUVAL_HAVE_AVX2
namespace avx2 {
void log_sum_exp3(std::span<const double> a, std::span<const double> b, std::span<const double> c,
                  std::span<double> out);
void cone_density(int n, std::span<const double> L, std::span<const double> v, std::span<double> q,
                  std::span<double> density);
/// Vector exp/log used by the kernels, exposed for accuracy tests.
void exp(std::span<const double> x, std::span<double> out);
void log(std::span<const double> x, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace duval::kernels
