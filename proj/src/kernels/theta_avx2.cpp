#include "flat4/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace flat4::kernels {

namespace {

// exp(x) for x <= 0. Results below exp(-708) are flushed to zero.
inline __m256d exp_neg_pd(__m256d x) {
    const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
    const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
    const __m256d lower = _mm256_set1_pd(-708.0);

    __m256d underflow = _mm256_cmp_pd(x, lower, _CMP_LT_OQ);
    x = _mm256_max_pd(x, lower);

    __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, ln2_hi, x);
    r = _mm256_fnmadd_pd(n, ln2_lo, r);

    // Taylor series to degree 13 on |r| <= ln2/2, Horner form.
    static constexpr double kInvFact[] = {
        1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0,
        1.0 / 362880.0,     1.0 / 40320.0,     1.0 / 5040.0,     1.0 / 720.0,
        1.0 / 120.0,        1.0 / 24.0,        1.0 / 6.0,        0.5,
        1.0,                1.0};
    __m256d p = _mm256_set1_pd(kInvFact[0]);
    for (int i = 1; i < 14; ++i) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kInvFact[i]));

    // 2^n through the exponent field; n is in [-1022, 0] here.
    __m128i ni = _mm256_cvtpd_epi32(n);
    __m256i e = _mm256_cvtepi32_epi64(ni);
    e = _mm256_slli_epi64(_mm256_add_epi64(e, _mm256_set1_epi64x(1023)), 52);
    __m256d scale = _mm256_castsi256_pd(e);

    __m256d y = _mm256_mul_pd(p, scale);
    return _mm256_andnot_pd(underflow, y);
}

}  // namespace

double theta_sum_avx2(double c, double r, int M) {
    const __m256d vc = _mm256_set1_pd(-c);
    const __m256d vr = _mm256_set1_pd(r);
    const __m256d step = _mm256_set1_pd(4.0);
    __m256d m = _mm256_setr_pd(-M, -M + 1, -M + 2, -M + 3);
    __m256d acc = _mm256_setzero_pd();

    const int count = 2 * M + 1;
    int i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256d t = _mm256_add_pd(m, vr);
        acc = _mm256_add_pd(acc, exp_neg_pd(_mm256_mul_pd(vc, _mm256_mul_pd(t, t))));
        m = _mm256_add_pd(m, step);
    }

    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < count; ++i) {
        const double t = (-M + i) + r;
        s += std::exp(-c * t * t);
    }
    return s;
}

}  // namespace flat4::kernels
