#include "fracdelay/simd.hpp"

namespace fracdelay::simd::scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        lane[0] = lane[0] + a[i] * b[i];
        lane[1] = lane[1] + a[i + 1] * b[i + 1];
        lane[2] = lane[2] + a[i + 2] * b[i + 2];
        lane[3] = lane[3] + a[i + 3] * b[i + 3];
    }
    for (; i < n; ++i) lane[i & 3] = lane[i & 3] + a[i] * b[i];
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void horner(const double* coef, std::size_t ncoef, const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (ncoef == 0) {
            out[i] = 0.0;
            continue;
        }
        double acc = coef[ncoef - 1];
        for (std::size_t k = ncoef - 1; k-- > 0;) acc = acc * x[i] + coef[k];
        out[i] = acc;
    }
}

}  // namespace fracdelay::simd::scalar
