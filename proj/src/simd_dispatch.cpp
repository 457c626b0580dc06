#include <atomic>

#include "fracdelay/errors.hpp"
#include "fracdelay/simd.hpp"

namespace fracdelay::simd {
namespace {

using DotFn = double (*)(const double*, const double*, std::size_t);
using HornerFn = void (*)(const double*, std::size_t, const double*, double*, std::size_t);

struct Table {
    DotFn dot;
    HornerFn horner;
};

Table table_for(Isa isa) {
    switch (isa) {
#if defined(FRACDELAY_HAVE_AVX2_VARIANT)
        case Isa::avx2: return {&avx2::dot, &avx2::horner};
#endif
#if defined(FRACDELAY_HAVE_NEON_VARIANT)
        case Isa::neon: return {&neon::dot, &neon::horner};
#endif
        default: return {&scalar::dot, &scalar::horner};
    }
}

std::atomic<int>& active_slot() {
    static std::atomic<int> slot{static_cast<int>(detected_isa())};
    return slot;
}

}  // namespace

const char* isa_name(Isa isa) {
    switch (isa) {
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
        default: return "scalar";
    }
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if defined(FRACDELAY_HAVE_AVX2_VARIANT) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::neon:
#if defined(FRACDELAY_HAVE_NEON_VARIANT)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa detected_isa() {
    if (isa_supported(Isa::avx2)) return Isa::avx2;
    if (isa_supported(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

Isa active_isa() { return static_cast<Isa>(active_slot().load(std::memory_order_relaxed)); }

void set_isa(Isa isa) {
    if (!isa_supported(isa)) throw DomainError(std::string("instruction set not available: ") + isa_name(isa));
    active_slot().store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { active_slot().store(static_cast<int>(detected_isa()), std::memory_order_relaxed); }

double dot(const double* a, const double* b, std::size_t n) { return table_for(active_isa()).dot(a, b, n); }

void horner(const double* coef, std::size_t ncoef, const double* x, double* out, std::size_t n) {
    table_for(active_isa()).horner(coef, ncoef, x, out, n);
}

}  // namespace fracdelay::simd
