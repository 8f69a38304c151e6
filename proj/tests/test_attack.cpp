#include "sharesim/attack.hpp"

#include "sharesim/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace sharesim;

namespace {

AttackScenarioSpec paper_defaults() {
    return AttackScenarioSpec{}; // struct defaults mirror the experiment set-up
}

DependencyNetwork star_into_hub(std::size_t n) {
    DependencyNetwork net(n);
    for (std::size_t leaf = 1; leaf < n; ++leaf) net.add_edge(leaf, 0, 0.5);
    return net;
}

} // namespace

TEST_CASE("ceil_fraction rounds up and never returns zero for a positive fraction") {
    CHECK(ceil_fraction(0.0, 10) == 0);
    CHECK(ceil_fraction(0.3, 10) == 3);
    CHECK(ceil_fraction(0.1, 10) == 1);
    CHECK(ceil_fraction(0.05, 50) == 3);
    CHECK(ceil_fraction(0.25, 10) == 3);
    CHECK(ceil_fraction(1e-9, 10) == 1);
    CHECK(ceil_fraction(1.0, 10) == 10);
    CHECK(ceil_fraction(0.5, 0) == 0);
}

TEST_CASE("catalogue sampling: zero spread collapses to the mean") {
    AttackScenarioSpec spec = paper_defaults();
    spec.impact_sd = 0.0;
    spec.impact_min = 0.0;
    spec.impact_max = 1.0;
    RandomStream rng(3);
    const auto cat = sample_catalogue(spec, 10, rng);
    for (double d : cat.impacts) CHECK(d == 0.4);
}

TEST_CASE("catalogue sampling: impacts land inside the clamp window") {
    const AttackScenarioSpec spec = paper_defaults(); // N(0.4, 0.2) clamped [0.2, 0.6]
    RandomStream rng(9);
    const auto cat = sample_catalogue(spec, 10, rng);
    CHECK(cat.size() == 10);
    for (double d : cat.impacts) {
        CHECK(d >= 0.2);
        CHECK(d <= 0.6);
    }
}

TEST_CASE("catalogue sampling is deterministic in the stream seed") {
    const AttackScenarioSpec spec = paper_defaults();
    RandomStream a(77), b(77);
    CHECK(sample_catalogue(spec, 10, a).impacts == sample_catalogue(spec, 10, b).impacts);
}

TEST_CASE("random-fraction targeting hits exactly the rounded-up share of nodes") {
    const auto net = generate_scale_free({.n = 50, .attach_count = 2, .edge_weight = 0.5,
                                          .seed = 7});
    AttackScenarioSpec spec = paper_defaults();
    RandomStream rng(5);
    const auto cat = sample_catalogue(spec, spec.catalogue_size, rng);
    for (int epoch = 0; epoch < 50; ++epoch) {
        const auto y = select_targets(net, spec, cat, rng);
        CHECK(y.target_count() == 3); // ceil(0.05 * 50)
        CHECK(y.active.size() == 3);  // ceil(0.3 * 10)
        for (std::size_t i = 0; i < 50; ++i) {
            if (!y.targeted(i)) continue;
            const auto id = static_cast<std::uint32_t>(y.attack_of[i]);
            CHECK(std::find(y.active.begin(), y.active.end(), id) != y.active.end());
        }
    }
}

TEST_CASE("zero target fraction yields an empty attack vector") {
    const auto net = star_into_hub(5);
    AttackScenarioSpec spec = paper_defaults();
    spec.target_fraction = 0.0;
    RandomStream rng(1);
    const AttackCatalogue cat{{0.4}};
    const auto y = select_targets(net, spec, cat, rng);
    CHECK(y.target_count() == 0);
}

TEST_CASE("zero active fraction means no attacks at all") {
    const auto net = star_into_hub(5);
    AttackScenarioSpec spec = paper_defaults();
    spec.active_fraction = 0.0;
    RandomStream rng(1);
    const AttackCatalogue cat{{0.4}};
    const auto y = select_targets(net, spec, cat, rng);
    CHECK(y.active.empty());
    CHECK(y.target_count() == 0);
}

TEST_CASE("in-degree targeting: hub frequency tracks degree/n, leaves sit at the floor") {
    const std::size_t n = 11;
    const auto net = star_into_hub(n); // hub in-degree 10, leaves 0
    AttackScenarioSpec spec = paper_defaults();
    spec.strategy = TargetStrategy::ProportionalInDegree;
    spec.active_fraction = 1.0;
    RandomStream rng(13);
    const AttackCatalogue cat{{0.4}};

    const int draws = 10000;
    int hub_hits = 0;
    int leaf_hits = 0;
    for (int d = 0; d < draws; ++d) {
        const auto y = select_targets(net, spec, cat, rng);
        if (y.targeted(0)) ++hub_hits;
        if (y.targeted(3)) ++leaf_hits;
    }
    const double hub_freq = static_cast<double>(hub_hits) / draws;
    const double leaf_freq = static_cast<double>(leaf_hits) / draws;
    CHECK(std::abs(hub_freq - 10.0 / 11.0) < 0.02);
    CHECK(std::abs(leaf_freq - 0.02) < 0.01); // degree 0 -> floor probability
}

TEST_CASE("out-degree targeting mirrors the in-degree rule") {
    const std::size_t n = 11;
    DependencyNetwork net(n); // hub 0 serves every leaf: out-degree 10
    for (std::size_t leaf = 1; leaf < n; ++leaf) net.add_edge(0, leaf, 0.5);
    AttackScenarioSpec spec = paper_defaults();
    spec.strategy = TargetStrategy::ProportionalOutDegree;
    spec.active_fraction = 1.0;
    RandomStream rng(29);
    const AttackCatalogue cat{{0.4}};

    const int draws = 10000;
    int hub_hits = 0;
    for (int d = 0; d < draws; ++d)
        if (select_targets(net, spec, cat, rng).targeted(0)) ++hub_hits;
    CHECK(std::abs(hub_hits / 10000.0 - 10.0 / 11.0) < 0.02);
}

TEST_CASE("target selection is deterministic under a fixed seed") {
    const auto net = generate_scale_free({.n = 20, .attach_count = 2, .edge_weight = 0.5,
                                          .seed = 2});
    const AttackScenarioSpec spec = paper_defaults();
    RandomStream a(4), b(4);
    const auto cat_a = sample_catalogue(spec, 10, a);
    const auto cat_b = sample_catalogue(spec, 10, b);
    for (int epoch = 0; epoch < 20; ++epoch) {
        const auto ya = select_targets(net, spec, cat_a, a);
        const auto yb = select_targets(net, spec, cat_b, b);
        CHECK(ya.attack_of == yb.attack_of);
        CHECK(ya.active == yb.active);
    }
}

TEST_CASE("scenario validation names the broken field") {
    AttackScenarioSpec spec = paper_defaults();
    spec.active_fraction = 1.5;
    CHECK_THROWS_WITH_AS(spec.validate(), doctest::Contains("active_fraction"),
                         ValidationError);
    spec = paper_defaults();
    spec.impact_min = 0.7; // above the mean
    CHECK_THROWS_WITH_AS(spec.validate(), doctest::Contains("impact_min"),
                         ValidationError);
    spec = paper_defaults();
    spec.catalogue_size = 0;
    CHECK_THROWS_WITH_AS(spec.validate(), doctest::Contains("catalogue_size"),
                         ValidationError);
}
