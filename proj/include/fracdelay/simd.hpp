#pragma once

#include <cstddef>

// Data-parallel kernels with a scalar reference and vector variants chosen
// at runtime. Every variant uses the same operation order as the scalar
// reference (four striped accumulators, no fused multiply-add), so results
// are bit-identical across variants.

namespace fracdelay::simd {

enum class Isa { scalar, avx2, neon };

const char* isa_name(Isa isa);
bool isa_supported(Isa isa);
Isa detected_isa();
Isa active_isa();
// Throws DomainError if the requested variant is not available here.
void set_isa(Isa isa);
void reset_isa();

double dot(const double* a, const double* b, std::size_t n);
// out[i] = sum_k coef[k] x[i]^k by Horner's rule.
void horner(const double* coef, std::size_t ncoef, const double* x, double* out, std::size_t n);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void horner(const double* coef, std::size_t ncoef, const double* x, double* out, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define FRACDELAY_HAVE_AVX2_VARIANT 1
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void horner(const double* coef, std::size_t ncoef, const double* x, double* out, std::size_t n);
}  // namespace avx2
#endif

#if defined(__aarch64__)
#define FRACDELAY_HAVE_NEON_VARIANT 1
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
void horner(const double* coef, std::size_t ncoef, const double* x, double* out, std::size_t n);
}  // namespace neon
#endif

}  // namespace fracdelay::simd
