#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace sharesim {

/// Deterministic, platform-independent random stream (xoshiro256**,
/// seeded through splitmix64). The standard <random> engines are pinned by
/// the standard but the distributions are not, and results here must be
/// bit-reproducible everywhere, so sampling is done by hand.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double next_unit_open_low() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    /// Gaussian sample via Box-Muller; consumes exactly two uniforms.
    double next_normal(double mean, double sd) {
        const double u1 = next_unit_open_low();
        const double u2 = next_unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        return mean + sd * radius * std::cos(2.0 * std::numbers::pi * u2);
    }

    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::uint64_t state_[4];
};

/// Counter-based seed split: independent child seeds from (master, index, tag)
/// without consuming any stream state.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, std::uint64_t tag) {
    std::uint64_t x = master;
    std::uint64_t h = RandomStream::splitmix64(x);
    x = h ^ (index * 0xD1B54A32D192ED03ULL + 0x2545F4914F6CDD1DULL);
    h = RandomStream::splitmix64(x);
    x = h ^ (tag * 0x9E3779B97F4A7C15ULL + 1);
    return RandomStream::splitmix64(x);
}

} // namespace sharesim
