#include "fracdelay/simd.hpp"

#if defined(FRACDELAY_HAVE_AVX2_VARIANT)
#include <immintrin.h>

namespace fracdelay::simd::avx2 {

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, prod);
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    for (; i < n; ++i) lane[i & 3] = lane[i & 3] + a[i] * b[i];
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void horner(const double* coef, std::size_t ncoef, const double* x, double* out, std::size_t n) {
    if (ncoef == 0) {
        for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
        return;
    }
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d xv = _mm256_loadu_pd(x + i);
        __m256d acc = _mm256_set1_pd(coef[ncoef - 1]);
        for (std::size_t k = ncoef - 1; k-- > 0;)
            acc = _mm256_add_pd(_mm256_mul_pd(acc, xv), _mm256_set1_pd(coef[k]));
        _mm256_storeu_pd(out + i, acc);
    }
    for (; i < n; ++i) {
        double acc = coef[ncoef - 1];
        for (std::size_t k = ncoef - 1; k-- > 0;) acc = acc * x[i] + coef[k];
        out[i] = acc;
    }
}

}  // namespace fracdelay::simd::avx2
#endif
