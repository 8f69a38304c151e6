#include "sharesim/kernels.hpp"

#include <algorithm>

// Reference kernels. These define the numeric semantics; the SIMD variants
// must reproduce them bit for bit.

namespace sharesim::kernels {
namespace {

void axpy_scalar(double* acc, const double* x, double a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double t = a * x[i];
        acc[i] = acc[i] + t;
    }
}

void scaled_sub_clamp_scalar(double* v, const double* base, const double* coef,
                             std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double t = base[i] * coef[i];
        v[i] = std::max(0.0, v[i] - t);
    }
}

void reputation_step_scalar(double* r, const std::uint8_t* rewarded,
                            const std::uint8_t* held, double reward_factor,
                            double punish_factor, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double f = rewarded[i] ? reward_factor : (held[i] ? 1.0 : punish_factor);
        r[i] = std::min(1.0, std::max(0.0, r[i] * f));
    }
}

double sum_scalar(const double* x, std::size_t n) {
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    const std::size_t quads = n / 4 * 4;
    for (std::size_t i = 0; i < quads; i += 4) {
        s0 += x[i];
        s1 += x[i + 1];
        s2 += x[i + 2];
        s3 += x[i + 3];
    }
    // Lane combine order is part of the kernel contract.
    double total = (s0 + s2) + (s1 + s3);
    for (std::size_t i = quads; i < n; ++i) total += x[i];
    return total;
}

} // namespace

const Ops& scalar_ops() {
    static const Ops table{axpy_scalar, scaled_sub_clamp_scalar,
                           reputation_step_scalar, sum_scalar};
    return table;
}

} // namespace sharesim::kernels
