#include "sharesim/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <algorithm>
#include <cstring>

// AVX2 variants. 4 doubles per step, scalar remainder loops. No fma: every
// multiply and add must round exactly like the reference kernels.

namespace sharesim::kernels {
namespace {

void axpy_avx2(double* acc, const double* x, double a, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d t = _mm256_mul_pd(av, _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(acc + i, _mm256_add_pd(_mm256_loadu_pd(acc + i), t));
    }
    for (; i < n; ++i) {
        const double t = a * x[i];
        acc[i] = acc[i] + t;
    }
}

void scaled_sub_clamp_avx2(double* v, const double* base, const double* coef,
                           std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d t = _mm256_mul_pd(_mm256_loadu_pd(base + i), _mm256_loadu_pd(coef + i));
        const __m256d u = _mm256_sub_pd(_mm256_loadu_pd(v + i), t);
        _mm256_storeu_pd(v + i, _mm256_max_pd(zero, u));
    }
    for (; i < n; ++i) {
        const double t = base[i] * coef[i];
        v[i] = std::max(0.0, v[i] - t);
    }
}

// Expand 4 bytes of a 0/1 mask array to a full-width lane mask.
inline __m256d load_mask4(const std::uint8_t* m) {
    std::uint32_t packed;
    std::memcpy(&packed, m, 4);
    const __m256i lanes = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(static_cast<int>(packed)));
    const __m256i is_zero = _mm256_cmpeq_epi64(lanes, _mm256_setzero_si256());
    // Sign bit set where the byte was nonzero.
    return _mm256_castsi256_pd(_mm256_xor_si256(is_zero, _mm256_set1_epi64x(-1)));
}

void reputation_step_avx2(double* r, const std::uint8_t* rewarded,
                          const std::uint8_t* held, double reward_factor,
                          double punish_factor, std::size_t n) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d fr = _mm256_set1_pd(reward_factor);
    const __m256d fp = _mm256_set1_pd(punish_factor);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d reward_mask = load_mask4(rewarded + i);
        const __m256d held_mask = load_mask4(held + i);
        const __m256d unrewarded = _mm256_blendv_pd(fp, one, held_mask);
        const __m256d f = _mm256_blendv_pd(unrewarded, fr, reward_mask);
        const __m256d t = _mm256_mul_pd(_mm256_loadu_pd(r + i), f);
        _mm256_storeu_pd(r + i, _mm256_min_pd(one, _mm256_max_pd(zero, t)));
    }
    for (; i < n; ++i) {
        const double f = rewarded[i] ? reward_factor : (held[i] ? 1.0 : punish_factor);
        r[i] = std::min(1.0, std::max(0.0, r[i] * f));
    }
}

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t quads = n / 4 * 4;
    for (std::size_t i = 0; i < quads; i += 4) {
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    }
    // (s0+s2)+(s1+s3), the association fixed by the kernel contract.
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    const __m128d swapped = _mm_unpackhi_pd(pair, pair);
    double total = _mm_cvtsd_f64(_mm_add_sd(pair, swapped));
    for (std::size_t i = quads; i < n; ++i) total += x[i];
    return total;
}

} // namespace

const Ops& avx2_ops() {
    static const Ops table{axpy_avx2, scaled_sub_clamp_avx2, reputation_step_avx2,
                           sum_avx2};
    return table;
}

} // namespace sharesim::kernels

#else // non-x86: AVX2 table never selected, keep the symbol defined

namespace sharesim::kernels {
const Ops& avx2_ops() { return scalar_ops(); }
} // namespace sharesim::kernels

#endif
