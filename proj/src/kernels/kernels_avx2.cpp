// AVX2 + FMA variants. Compiled with -mavx2 -mfma; only called after the
// dispatcher has confirmed CPU support.
//
// exp follows the Cephes rational approximation; log reduces to
// [sqrt(1/2), sqrt(2)) and sums the atanh series.

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cone_solve.hpp"
#include "duval/kernels.hpp"

namespace duval::kernels::avx2 {

namespace {

inline __m256d set1(double x) { return _mm256_set1_pd(x); }

inline __m256d abs_pd(__m256d x) { return _mm256_andnot_pd(set1(-0.0), x); }

__m256d exp_pd(__m256d x) {
  const __m256d overflow = _mm256_cmp_pd(x, set1(709.782712893384), _CMP_GT_OQ);
  const __m256d underflow = _mm256_cmp_pd(x, set1(-745.2), _CMP_LT_OQ);
  x = _mm256_min_pd(_mm256_max_pd(x, set1(-745.2)), set1(709.782712893384));

  const __m256d fx = _mm256_round_pd(_mm256_mul_pd(x, set1(1.4426950408889634073599)),
                                     _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(fx, set1(6.93145751953125E-1), x);
  r = _mm256_fnmadd_pd(fx, set1(1.42860682030941723212E-6), r);
  const __m256d rr = _mm256_mul_pd(r, r);

  __m256d p = set1(1.26177193074810590878E-4);
  p = _mm256_fmadd_pd(p, rr, set1(3.02994407707441961300E-2));
  p = _mm256_fmadd_pd(p, rr, set1(9.99999999999999999910E-1));
  p = _mm256_mul_pd(p, r);

  __m256d q = set1(3.00198505138664455042E-6);
  q = _mm256_fmadd_pd(q, rr, set1(2.52448340349684104192E-3));
  q = _mm256_fmadd_pd(q, rr, set1(2.27265548208155028766E-1));
  q = _mm256_fmadd_pd(q, rr, set1(2.00000000000000000009E0));

  __m256d e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
  e = _mm256_fmadd_pd(set1(2.0), e, set1(1.0));

  // 2^n applied as 2^h * 2^(n-h), h = n >> 1, so both factors stay normal for n in [-1075, 1024].
  const __m128i n32 = _mm256_cvtpd_epi32(fx);
  const __m128i h32 = _mm_srai_epi32(n32, 1);
  const __m256i bias = _mm256_set1_epi64x(1023);
  const __m256i h = _mm256_slli_epi64(_mm256_add_epi64(_mm256_cvtepi32_epi64(h32), bias), 52);
  const __m256i rest =
      _mm256_slli_epi64(_mm256_add_epi64(_mm256_cvtepi32_epi64(_mm_sub_epi32(n32, h32)), bias), 52);
  __m256d result = _mm256_mul_pd(_mm256_mul_pd(e, _mm256_castsi256_pd(h)), _mm256_castsi256_pd(rest));

  result = _mm256_blendv_pd(result, set1(std::numeric_limits<double>::infinity()), overflow);
  result = _mm256_blendv_pd(result, _mm256_setzero_pd(), underflow);
  return result;
}

__m256d log_pd(__m256d x) {
  const __m256d is_zero = _mm256_cmp_pd(x, _mm256_setzero_pd(), _CMP_EQ_OQ);
  const __m256d is_negative = _mm256_cmp_pd(x, _mm256_setzero_pd(), _CMP_LT_OQ);
  const __m256d is_inf = _mm256_cmp_pd(x, set1(std::numeric_limits<double>::infinity()), _CMP_EQ_OQ);

  // Lift subnormals into the normal range.
  const __m256d subnormal = _mm256_cmp_pd(x, set1(std::numeric_limits<double>::min()), _CMP_LT_OQ);
  x = _mm256_blendv_pd(x, _mm256_mul_pd(x, set1(18014398509481984.0)), subnormal);  // 2^54
  const __m256d exponent_shift = _mm256_and_pd(subnormal, set1(54.0));

  // frexp: x = mantissa * 2^e with mantissa in [0.5, 1).
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i biased = _mm256_and_si256(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(0x7ff));
  const __m256i mantissa_bits = _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x800FFFFFFFFFFFFFLL)),
                                                _mm256_set1_epi64x(0x3FE0000000000000LL));
  __m256d m = _mm256_castsi256_pd(mantissa_bits);
  // Exponents fit in 32 bits; gather the low halves and convert.
  const __m256i packed = _mm256_permutevar8x32_epi32(biased, _mm256_setr_epi32(0, 2, 4, 6, 1, 3, 5, 7));
  __m256d e = _mm256_cvtepi32_pd(_mm256_castsi256_si128(packed));
  e = _mm256_sub_pd(_mm256_sub_pd(e, set1(1022.0)), exponent_shift);

  const __m256d small = _mm256_cmp_pd(m, set1(0.70710678118654752440), _CMP_LT_OQ);
  e = _mm256_sub_pd(e, _mm256_and_pd(small, set1(1.0)));
  m = _mm256_add_pd(m, _mm256_and_pd(small, m));
  m = _mm256_sub_pd(m, set1(1.0));

  // log(1 + m) = 2 atanh(w), w = m / (2 + m), |w| <= 0.172; odd series to w^23.
  const __m256d w = _mm256_div_pd(m, _mm256_add_pd(set1(2.0), m));
  const __m256d w2 = _mm256_mul_pd(w, w);
  __m256d series = set1(1.0 / 23.0);
  for (int j = 21; j >= 1; j -= 2) series = _mm256_fmadd_pd(series, w2, set1(1.0 / j));
  __m256d result = _mm256_fmadd_pd(e, set1(-2.121944400546905827679E-4), _mm256_mul_pd(_mm256_add_pd(w, w), series));
  result = _mm256_fmadd_pd(e, set1(0.693359375), result);

  result = _mm256_blendv_pd(result, set1(-std::numeric_limits<double>::infinity()), is_zero);
  result = _mm256_blendv_pd(result, set1(std::numeric_limits<double>::quiet_NaN()), is_negative);
  result = _mm256_blendv_pd(result, set1(std::numeric_limits<double>::infinity()), is_inf);
  return result;
}

// log(1 + y) for y >= 0 via Kahan's correction.
__m256d log1p_pd(__m256d y) {
  const __m256d w = _mm256_add_pd(set1(1.0), y);
  const __m256d wm1 = _mm256_sub_pd(w, set1(1.0));
  const __m256d exact = _mm256_cmp_pd(w, set1(1.0), _CMP_EQ_OQ);
  // Avoid 0/0 in lanes that take the exact branch.
  const __m256d safe_wm1 = _mm256_blendv_pd(wm1, set1(1.0), exact);
  const __m256d corrected = _mm256_div_pd(_mm256_mul_pd(log_pd(w), y), safe_wm1);
  return _mm256_blendv_pd(corrected, y, exact);
}

// exp(x) - 1 for x <= 0 via Kahan's correction.
__m256d expm1_neg_pd(__m256d x) {
  const __m256d u = exp_pd(x);
  const __m256d um1 = _mm256_sub_pd(u, set1(1.0));
  const __m256d is_one = _mm256_cmp_pd(u, set1(1.0), _CMP_EQ_OQ);
  const __m256d saturated = _mm256_cmp_pd(um1, set1(-1.0), _CMP_EQ_OQ);
  const __m256d safe_log = _mm256_blendv_pd(log_pd(u), set1(1.0), _mm256_or_pd(is_one, saturated));
  __m256d result = _mm256_div_pd(_mm256_mul_pd(um1, x), safe_log);
  result = _mm256_blendv_pd(result, x, is_one);
  result = _mm256_blendv_pd(result, set1(-1.0), saturated);
  return result;
}

void require_same_size(std::size_t expected, std::size_t actual) {
  if (expected != actual) throw std::invalid_argument("kernel spans differ in length");
}

// Runs `body(i, count)` over full lanes of 4 and hands the remainder to a
// padded scratch block.
template <class Full, class Tail>
void for_each_block(std::size_t size, Full&& full, Tail&& tail) {
  std::size_t i = 0;
  for (; i + 4 <= size; i += 4) full(i);
  if (i < size) tail(i, size - i);
}

__m256d lse3_pd(__m256d a, __m256d b, __m256d c) {
  const __m256d m = _mm256_max_pd(_mm256_max_pd(a, b), c);
  const __m256d s = _mm256_add_pd(_mm256_add_pd(exp_pd(_mm256_sub_pd(a, m)), exp_pd(_mm256_sub_pd(b, m))),
                                  exp_pd(_mm256_sub_pd(c, m)));
  const __m256d out = _mm256_add_pd(m, log_pd(s));
  const __m256d all_neg_inf = _mm256_cmp_pd(m, set1(-std::numeric_limits<double>::infinity()), _CMP_EQ_OQ);
  return _mm256_blendv_pd(out, m, all_neg_inf);
}

void cone_block(int n, __m256d L, __m256d v, __m256d& q_out, __m256d& density_out) {
  const double nd = n;
  const __m256d m = set1(2.0 * nd + 2.0);
  const __m256d positive = _mm256_cmp_pd(v, _mm256_setzero_pd(), _CMP_GT_OQ);
  const __m256d v_safe = _mm256_blendv_pd(set1(1.0), v, positive);

  const __m256d log_one_minus = log_pd(_mm256_sub_pd(_mm256_setzero_pd(),
                                                     expm1_neg_pd(_mm256_mul_pd(_mm256_sub_pd(_mm256_setzero_pd(), m), v_safe))));
  // Same expression order as detail::cone_rhs.
  __m256d c = _mm256_div_pd(_mm256_mul_pd(L, set1(nd - 1.0)), set1(nd));
  c = _mm256_add_pd(c, _mm256_div_pd(_mm256_mul_pd(_mm256_mul_pd(set1(2.0), v_safe), set1(nd + 1.0)), set1(nd)));
  c = _mm256_add_pd(c, log_one_minus);

  const __m256d inv_n = set1(1.0 / nd);
  __m256d q = _mm256_min_pd(_mm256_mul_pd(set1(nd), c), _mm256_div_pd(_mm256_mul_pd(set1(nd), c), set1(nd + 1.0)));
  __m256d active = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
  for (int it = 0; it < detail::kMaxNewtonIterations; ++it) {
    const __m256d e = exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), abs_pd(q)));
    const __m256d softplus = _mm256_add_pd(_mm256_max_pd(q, _mm256_setzero_pd()), log1p_pd(e));
    const __m256d one_plus_e = _mm256_add_pd(set1(1.0), e);
    const __m256d nonneg = _mm256_cmp_pd(q, _mm256_setzero_pd(), _CMP_GE_OQ);
    const __m256d sigmoid = _mm256_div_pd(_mm256_blendv_pd(e, set1(1.0), nonneg), one_plus_e);
    const __m256d residual = _mm256_sub_pd(_mm256_add_pd(_mm256_mul_pd(q, inv_n), softplus), c);
    const __m256d step = _mm256_div_pd(residual, _mm256_add_pd(inv_n, sigmoid));
    q = _mm256_blendv_pd(q, _mm256_sub_pd(q, step), active);
    const __m256d scale = _mm256_max_pd(set1(1.0), abs_pd(q));
    const __m256d moving = _mm256_cmp_pd(abs_pd(step), _mm256_mul_pd(set1(detail::kNewtonRelativeStep), scale), _CMP_GT_OQ);
    active = _mm256_and_pd(active, moving);
    if (_mm256_movemask_pd(active) == 0) break;
  }
  __m256d density = _mm256_div_pd(set1(1.0), _mm256_fmadd_pd(m, exp_pd(q), set1(2.0)));

  q_out = _mm256_blendv_pd(set1(-std::numeric_limits<double>::infinity()), q, positive);
  density_out = _mm256_blendv_pd(set1(0.5), density, positive);
}

}  // namespace

void exp(std::span<const double> x, std::span<double> out) {
  require_same_size(x.size(), out.size());
  for_each_block(
      x.size(), [&](std::size_t i) { _mm256_storeu_pd(&out[i], exp_pd(_mm256_loadu_pd(&x[i]))); },
      [&](std::size_t i, std::size_t count) {
        std::array<double, 4> in{}, res{};
        std::copy_n(&x[i], count, in.begin());
        _mm256_storeu_pd(res.data(), exp_pd(_mm256_loadu_pd(in.data())));
        std::copy_n(res.begin(), count, &out[i]);
      });
}

void log(std::span<const double> x, std::span<double> out) {
  require_same_size(x.size(), out.size());
  for_each_block(
      x.size(), [&](std::size_t i) { _mm256_storeu_pd(&out[i], log_pd(_mm256_loadu_pd(&x[i]))); },
      [&](std::size_t i, std::size_t count) {
        std::array<double, 4> in{1.0, 1.0, 1.0, 1.0}, res{};
        std::copy_n(&x[i], count, in.begin());
        _mm256_storeu_pd(res.data(), log_pd(_mm256_loadu_pd(in.data())));
        std::copy_n(res.begin(), count, &out[i]);
      });
}

void log_sum_exp3(std::span<const double> a, std::span<const double> b, std::span<const double> c,
                  std::span<double> out) {
  require_same_size(a.size(), b.size());
  require_same_size(a.size(), c.size());
  require_same_size(a.size(), out.size());
  for_each_block(
      a.size(),
      [&](std::size_t i) {
        _mm256_storeu_pd(&out[i], lse3_pd(_mm256_loadu_pd(&a[i]), _mm256_loadu_pd(&b[i]), _mm256_loadu_pd(&c[i])));
      },
      [&](std::size_t i, std::size_t count) {
        std::array<double, 4> pa{}, pb{}, pc{}, res{};
        std::copy_n(&a[i], count, pa.begin());
        std::copy_n(&b[i], count, pb.begin());
        std::copy_n(&c[i], count, pc.begin());
        _mm256_storeu_pd(res.data(), lse3_pd(_mm256_loadu_pd(pa.data()), _mm256_loadu_pd(pb.data()),
                                             _mm256_loadu_pd(pc.data())));
        std::copy_n(res.begin(), count, &out[i]);
      });
}

void cone_density(int n, std::span<const double> L, std::span<const double> v, std::span<double> q,
                  std::span<double> density) {
  require_same_size(L.size(), v.size());
  require_same_size(L.size(), q.size());
  require_same_size(L.size(), density.size());
  if (n < 1) throw std::invalid_argument("cone_density needs n >= 1");
  for_each_block(
      L.size(),
      [&](std::size_t i) {
        __m256d qv, dv;
        cone_block(n, _mm256_loadu_pd(&L[i]), _mm256_loadu_pd(&v[i]), qv, dv);
        _mm256_storeu_pd(&q[i], qv);
        _mm256_storeu_pd(&density[i], dv);
      },
      [&](std::size_t i, std::size_t count) {
        std::array<double, 4> pl{-1.0, -1.0, -1.0, -1.0}, pv{1.0, 1.0, 1.0, 1.0}, rq{}, rd{};
        std::copy_n(&L[i], count, pl.begin());
        std::copy_n(&v[i], count, pv.begin());
        __m256d qv, dv;
        cone_block(n, _mm256_loadu_pd(pl.data()), _mm256_loadu_pd(pv.data()), qv, dv);
        _mm256_storeu_pd(rq.data(), qv);
        _mm256_storeu_pd(rd.data(), dv);
        std::copy_n(rq.begin(), count, &q[i]);
        std::copy_n(rd.begin(), count, &density[i]);
      });
}

}  // namespace duval::kernels::avx2
