#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace sharesim::kernels {

// Data-parallel inner loops of the simulator. Every kernel has a scalar
// reference implementation and an AVX2 variant selected at runtime; the two
// are bit-identical by contract, which the kernel tests assert on random
// inputs and on whole simulation runs.
//
// To keep that contract:
//  * elementwise kernels round every multiply and add separately (no fma;
//    the build disables FP contraction),
//  * sum() is defined as a 4-lane striped sum: lane l accumulates
//    x[l], x[l+4], x[l+8], ...; lanes combine as (s0+s2)+(s1+s3); any tail
//    elements (n % 4) are then added one by one. Both backends implement
//    exactly this association.
// Inputs must be finite.

struct Ops {
    /// acc[i] += a * x[i]
    void (*axpy)(double* acc, const double* x, double a, std::size_t n);

    /// v[i] = max(0, v[i] - base[i] * coef[i])
    void (*scaled_sub_clamp)(double* v, const double* base, const double* coef,
                             std::size_t n);

    /// r[i] = clamp01(r[i] * f_i) with
    ///   f_i = reward_factor if rewarded[i], else 1 if held[i], else punish_factor
    void (*reputation_step)(double* r, const std::uint8_t* rewarded,
                            const std::uint8_t* held, double reward_factor,
                            double punish_factor, std::size_t n);

    /// 4-lane striped sum (see the association contract above).
    double (*sum)(const double* x, std::size_t n);
};

enum class Backend { Scalar, Avx2 };

/// Active kernel table. Resolved once: AVX2 when the CPU supports it,
/// overridable with SHARESIM_KERNELS=scalar|avx2.
const Ops& ops();

Backend active_backend();
std::string backend_name(Backend b);
bool avx2_supported();

/// Force a backend (testing hook). Throws ValidationError if unavailable.
void force_backend(Backend b);

const Ops& scalar_ops();
const Ops& avx2_ops(); // valid only when avx2_supported()

} // namespace sharesim::kernels
