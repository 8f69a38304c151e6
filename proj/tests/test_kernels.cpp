#include "sharesim/kernels.hpp"
#include "sharesim/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <vector>

using namespace sharesim;
namespace k = sharesim::kernels;

namespace {

std::vector<double> random_vec(RandomStream& rng, std::size_t n, double lo = 0.0,
                               double hi = 1.0) {
    std::vector<double> v(n);
    for (auto& x : v) x = lo + (hi - lo) * rng.next_unit();
    return v;
}

std::vector<std::uint8_t> random_mask(RandomStream& rng, std::size_t n) {
    std::vector<std::uint8_t> m(n);
    for (auto& x : m) x = static_cast<std::uint8_t>(rng.next_u64() & 1u);
    return m;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

} // namespace

TEST_CASE("scalar kernels match naive semantics") {
    const auto& ops = k::scalar_ops();

    std::vector<double> acc{1.0, 2.0, 3.0};
    const std::vector<double> x{0.5, 0.25, 0.125};
    ops.axpy(acc.data(), x.data(), 2.0, 3);
    CHECK(acc[0] == 2.0);
    CHECK(acc[1] == 2.5);
    CHECK(acc[2] == 3.25);

    std::vector<double> v{0.5, 0.5, 0.5};
    const std::vector<double> base{1.0, 1.0, 1.0};
    const std::vector<double> coef{0.25, 0.75, 0.0};
    ops.scaled_sub_clamp(v.data(), base.data(), coef.data(), 3);
    CHECK(v[0] == 0.25);
    CHECK(v[1] == 0.0); // clamped
    CHECK(v[2] == 0.5);

    std::vector<double> r{0.5, 0.5, 0.5, 0.9};
    const std::vector<std::uint8_t> rewarded{1, 0, 0, 1};
    const std::vector<std::uint8_t> held{0, 1, 0, 0};
    ops.reputation_step(r.data(), rewarded.data(), held.data(), 1.3, 0.7, 4);
    CHECK(r[0] == doctest::Approx(0.65).epsilon(1e-15));
    CHECK(r[1] == 0.5);
    CHECK(r[2] == doctest::Approx(0.35).epsilon(1e-15));
    CHECK(r[3] == 1.0); // 0.9 * 1.3 clamps at 1
}

TEST_CASE("striped sum stays close to a naive left-to-right sum") {
    RandomStream rng(11);
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 50u, 257u}) {
        const auto x = random_vec(rng, n, -1.0, 1.0);
        double naive = 0.0;
        for (double v : x) naive += v;
        const double striped = k::scalar_ops().sum(x.data(), n);
        CHECK(std::abs(striped - naive) <= 1e-12 * static_cast<double>(n + 1));
    }
}

TEST_CASE("avx2 kernels are bit-identical to the scalar reference") {
    if (!k::avx2_supported()) {
        MESSAGE("AVX2 not available; skipping equivalence checks");
        return;
    }
    const auto& scalar = k::scalar_ops();
    const auto& avx2 = k::avx2_ops();
    RandomStream rng(42);

    // Sizes straddle the 4-lane width to exercise the remainder loops.
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 8u, 13u, 50u, 64u, 257u}) {
        for (int rep = 0; rep < 25; ++rep) {
            const auto x = random_vec(rng, n);
            const double a = rng.next_unit();

            auto acc_s = random_vec(rng, n);
            auto acc_v = acc_s;
            scalar.axpy(acc_s.data(), x.data(), a, n);
            avx2.axpy(acc_v.data(), x.data(), a, n);
            CHECK(bit_equal(acc_s, acc_v));

            auto v_s = random_vec(rng, n);
            auto v_v = v_s;
            const auto base = random_vec(rng, n);
            const auto coef = random_vec(rng, n, 0.0, 2.0); // force some clamping
            scalar.scaled_sub_clamp(v_s.data(), base.data(), coef.data(), n);
            avx2.scaled_sub_clamp(v_v.data(), base.data(), coef.data(), n);
            CHECK(bit_equal(v_s, v_v));

            auto r_s = random_vec(rng, n);
            auto r_v = r_s;
            const auto rewarded = random_mask(rng, n);
            const auto held = random_mask(rng, n);
            scalar.reputation_step(r_s.data(), rewarded.data(), held.data(), 1.3, 0.7, n);
            avx2.reputation_step(r_v.data(), rewarded.data(), held.data(), 1.3, 0.7, n);
            CHECK(bit_equal(r_s, r_v));

            const auto y = random_vec(rng, n, -1.0, 1.0);
            const double sum_s = scalar.sum(y.data(), n);
            const double sum_v = avx2.sum(y.data(), n);
            CHECK(std::memcmp(&sum_s, &sum_v, sizeof(double)) == 0);
        }
    }
}

TEST_CASE("backend dispatch can be forced and reports its name") {
    const k::Backend original = k::active_backend();
    k::force_backend(k::Backend::Scalar);
    CHECK(k::active_backend() == k::Backend::Scalar);
    CHECK(k::backend_name(k::active_backend()) == "scalar");
    k::force_backend(original);
    CHECK(k::active_backend() == original);
}
