#include "sharesim/rng.hpp"

#include <doctest.h>

#include <cstdint>

using namespace sharesim;

TEST_CASE("streams with equal seeds are identical") {
    RandomStream a(123), b(123);
    for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("unit draws stay in range") {
    RandomStream rng(5);
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double v = rng.next_unit_open_low();
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("bounded draws respect the bound") {
    RandomStream rng(17);
    for (int i = 0; i < 1000; ++i) CHECK(rng.next_below(7) < 7);
    // bound 1 is always 0
    for (int i = 0; i < 10; ++i) CHECK(rng.next_below(1) == 0);
}

TEST_CASE("derived seeds separate by index and tag") {
    const std::uint64_t s00 = derive_seed(99, 0, 0);
    CHECK(s00 != derive_seed(99, 1, 0));
    CHECK(s00 != derive_seed(99, 0, 1));
    CHECK(s00 != derive_seed(100, 0, 0));
    CHECK(s00 == derive_seed(99, 0, 0)); // pure function
}

TEST_CASE("normal draws honour the degenerate case") {
    RandomStream rng(1);
    for (int i = 0; i < 100; ++i) CHECK(rng.next_normal(0.4, 0.0) == 0.4);
}
