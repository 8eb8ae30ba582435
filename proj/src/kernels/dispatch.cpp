#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "duval/kernels.hpp"

namespace duval::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(DUVAL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect() {
  Isa best = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
  if (const char* forced = std::getenv("DUVAL_ISA")) {
    const std::string name(forced);
    if (name == "scalar") return Isa::scalar;
    if (name == "avx2" && best == Isa::avx2) return Isa::avx2;
  }
  return best;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) throw std::runtime_error("kernel ISA '" + std::string(isa_name(isa)) + "' not available");
  current().store(isa, std::memory_order_relaxed);
}

void log_sum_exp3(std::span<const double> a, std::span<const double> b, std::span<const double> c,
                  std::span<double> out) {
#ifdef DUVAL_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::log_sum_exp3(a, b, c, out);
#endif
  scalar::log_sum_exp3(a, b, c, out);
}

void cone_density(int n, std::span<const double> L, std::span<const double> v, std::span<double> q,
                  std::span<double> density) {
#ifdef DUVAL_HAVE_AVX2
  if (active_isa() == Isa::avx2) return avx2::cone_density(n, L, v, q, density);
#endif
  scalar::cone_density(n, L, v, q, density);
}

}  // namespace duval::kernels
