#include "fracdelay/simd.hpp"

#if defined(FRACDELAY_HAVE_NEON_VARIANT)
#include <arm_neon.h>

namespace fracdelay::simd::neon {

double dot(const double* a, const double* b, std::size_t n) {
    float64x2_t lo = vdupq_n_f64(0.0);
    float64x2_t hi = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        lo = vaddq_f64(lo, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
        hi = vaddq_f64(hi, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
    }
    double lane[4];
    vst1q_f64(lane, lo);
    vst1q_f64(lane + 2, hi);
    for (; i < n; ++i) lane[i & 3] = lane[i & 3] + a[i] * b[i];
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void horner(const double* coef, std::size_t ncoef, const double* x, double* out, std::size_t n) {
    if (ncoef == 0) {
        for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
        return;
    }
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t xv = vld1q_f64(x + i);
        float64x2_t acc = vdupq_n_f64(coef[ncoef - 1]);
        for (std::size_t k = ncoef - 1; k-- > 0;)
            acc = vaddq_f64(vmulq_f64(acc, xv), vdupq_n_f64(coef[k]));
        vst1q_f64(out + i, acc);
    }
    for (; i < n; ++i) {
        double acc = coef[ncoef - 1];
        for (std::size_t k = ncoef - 1; k-- > 0;) acc = acc * x[i] + coef[k];
        out[i] = acc;
    }
}

}  // namespace fracdelay::simd::neon
#endif
