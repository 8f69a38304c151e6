#include "sharesim/sharing.hpp"

#include "sharesim/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace sharesim;

namespace {

bool near(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol; }

AttackVector attack_on(std::size_t n, std::size_t node, std::int32_t attack = 0) {
    AttackVector y;
    y.attack_of.assign(n, AttackVector::kNotTargeted);
    if (node < n) y.attack_of[node] = attack;
    y.active.push_back(static_cast<std::uint32_t>(attack));
    return y;
}

AttackVector no_attacks(std::size_t n) { return attack_on(n, n); }

} // namespace

TEST_CASE("actions: the no-one policy never shares") {
    DependencyNetwork net(4);
    net.add_edge(0, 1, 0.5);
    const std::vector<SharingPolicy> policies(4, SharingPolicy{SharingPolicy::Kind::NoOne});
    const auto actions = decide_actions(policies, net, attack_on(4, 1));
    for (auto a : actions.flat()) CHECK(a == 0);
}

TEST_CASE("actions: broadcast reaches everyone but the sharer") {
    DependencyNetwork net(4);
    const std::vector<SharingPolicy> policies(4,
                                              SharingPolicy{SharingPolicy::Kind::Broadcast});
    const auto actions = decide_actions(policies, net, attack_on(4, 2));
    CHECK(actions(2, 0) == 1);
    CHECK(actions(2, 1) == 1);
    CHECK(actions(2, 3) == 1);
    CHECK(actions(2, 2) == 0);
    // Untargeted nodes stay silent even under broadcast.
    for (std::size_t i : {0u, 1u, 3u})
        for (std::size_t j = 0; j < 4; ++j) CHECK(actions(i, j) == 0);
}

TEST_CASE("actions: all-dependencies goes to every provider") {
    DependencyNetwork net(4);
    net.add_edge(1, 0, 0.5); // 1 and 3 provide services to 0
    net.add_edge(3, 0, 0.2);
    net.add_edge(0, 2, 0.9); // 0's own service, not a dependency of 0
    const std::vector<SharingPolicy> policies(
        4, SharingPolicy{SharingPolicy::Kind::AllDependencies});
    const auto actions = decide_actions(policies, net, attack_on(4, 0));
    CHECK(actions(0, 1) == 1);
    CHECK(actions(0, 3) == 1);
    CHECK(actions(0, 2) == 0);
}

TEST_CASE("actions: top-dependency fraction takes the strongest providers, ties by id") {
    // Ten equal-weight providers of node 10: ceil(0.1 * 10) = 1 recipient,
    // the lowest id.
    DependencyNetwork net(11);
    for (std::size_t p = 0; p < 10; ++p) net.add_edge(p, 10, 0.5);
    const std::vector<SharingPolicy> policies(
        11, SharingPolicy{SharingPolicy::Kind::TopDependencyFraction, 0.1});
    const auto actions = decide_actions(policies, net, attack_on(11, 10));
    for (std::size_t p = 0; p < 10; ++p) CHECK(actions(10, p) == (p == 0 ? 1 : 0));
}

TEST_CASE("actions: top-dependency fraction prefers heavier providers") {
    DependencyNetwork net(4);
    net.add_edge(1, 0, 0.2);
    net.add_edge(2, 0, 0.9);
    net.add_edge(3, 0, 0.4);
    const std::vector<SharingPolicy> policies(
        4, SharingPolicy{SharingPolicy::Kind::TopDependencyFraction, 0.5});
    const auto actions = decide_actions(policies, net, attack_on(4, 0));
    CHECK(actions(0, 2) == 1); // ceil(0.5*3) = 2: weights 0.9 and 0.4
    CHECK(actions(0, 3) == 1);
    CHECK(actions(0, 1) == 0);
}

TEST_CASE("awareness: a useful share flags the provider and schedules immunity") {
    const std::size_t n = 3;
    ActionMatrix actions(n, n, 0);
    actions(1, 0) = 1; // node 1 shares with node 0
    ImmunizationMatrix immunity(2, n);
    std::vector<AwarenessEvent> events;
    const auto w = compute_awareness(actions, attack_on(n, 1, 1), immunity, &events);
    CHECK(w.w(0, 1) == 1);
    REQUIRE(events.size() == 1);
    CHECK(events[0] == AwarenessEvent{0, 1, 1});
}

TEST_CASE("awareness: no attack on the sharer means nothing to learn") {
    const std::size_t n = 3;
    ActionMatrix actions(n, n, 0);
    actions(1, 0) = 1;
    ImmunizationMatrix immunity(1, n);
    const auto w = compute_awareness(actions, no_attacks(n), immunity, nullptr);
    for (auto v : w.w.flat()) CHECK(v == 0);
}

TEST_CASE("awareness: an already immunized receiver learns nothing") {
    const std::size_t n = 3;
    ActionMatrix actions(n, n, 0);
    actions(1, 0) = 1;
    ImmunizationMatrix immunity(1, n);
    immunity.level(0, 0) = 1.0;
    const auto w = compute_awareness(actions, attack_on(n, 1, 0), immunity, nullptr);
    for (auto v : w.w.flat()) CHECK(v == 0);
}

TEST_CASE("payoff: share/share cell") {
    // (reputation + awareness) - cost/trust on both sides.
    const auto u = payoff(true, true, 0.5, 0.5, 1.0, 1.0, 0.5, 0.5, 0.16, 0.16);
    CHECK(near(u.u_a, 1.18)); // (0.5 + 1) - 0.16/0.5
    CHECK(near(u.u_b, 1.18));
    CHECK(u.u_a + u.u_b != 0.0); // non-zero-sum game
}

TEST_CASE("payoff: not-share/not-share cell") {
    const auto u = payoff(false, false, 0.5, 0.5, 0.0, 0.0, 0.5, 0.5, 0.16, 0.16);
    CHECK(near(u.u_a, -0.34)); // 0.16 - 0.5
    CHECK(near(u.u_b, -0.34));
}

TEST_CASE("payoff: mixed cell punishes the silent side relative to reputation") {
    // A shares, B does not: B keeps its cost plus awareness minus reputation.
    const auto u = payoff(true, false, 0.5, 0.5, 0.0, 0.0, 0.5, 0.5, 0.16, 0.16);
    CHECK(near(u.u_a, 0.5 - 0.32)); // reputation - cost/trust
    CHECK(near(u.u_b, -0.34));      // 0.16 - 0.5
    // And the mirrored cell swaps roles.
    const auto m = payoff(false, true, 0.5, 0.5, 0.0, 0.0, 0.5, 0.5, 0.16, 0.16);
    CHECK(near(m.u_b, 0.5 - 0.32));
    CHECK(near(m.u_a, -0.34));
}

TEST_CASE("payoff: zero trust is guarded, not divided by") {
    const auto u = payoff(true, false, 0.5, 0.5, 0.0, 0.0, 0.0, 0.5, 0.16, 0.16);
    CHECK(std::isfinite(u.u_a));
    CHECK(near(u.u_a, 0.5 - 0.16 / kMinTrustDivisor));
}

TEST_CASE("payoff: higher trust never hurts a sharer") {
    RandomStream rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const double r_ab = rng.next_unit();
        const double w_ab = rng.next_u64() & 1 ? 1.0 : 0.0;
        const double c_a = rng.next_unit();
        const double t_lo = rng.next_unit();
        const double t_hi = t_lo + (1.0 - t_lo) * rng.next_unit();
        const bool share_ba = rng.next_u64() & 1;
        const auto lo = payoff(true, share_ba, r_ab, 0.5, w_ab, 0.0, t_lo, 0.5, c_a, 0.2);
        const auto hi = payoff(true, share_ba, r_ab, 0.5, w_ab, 0.0, t_hi, 0.5, c_a, 0.2);
        CHECK(hi.u_a >= lo.u_a);
    }
}

TEST_CASE("payoff: asymmetric inputs split utilities under equal actions") {
    const auto u = payoff(true, true, 0.5, 0.5, 0.0, 0.0, 0.9, 0.3, 0.16, 0.16);
    CHECK(u.u_a != u.u_b);
}

TEST_CASE("games: every unordered pair plays once") {
    const std::size_t n = 6;
    ActionMatrix actions(n, n, 0);
    AwarenessMatrix aw{MatU8(n, n, 0)};
    TrustMatrix trust{MatD(n, n, 0.5)};
    SharingCosts costs = SharingCosts::from_values(0.2, std::vector<double>(n, 0.8));
    const auto outcome = play_games(actions, MatD(n, n, 0.5), aw, trust, costs);
    CHECK(outcome.pairs.size() == n * (n - 1) / 2);
    std::size_t utilities = 0;
    for (std::size_t i = 0; i < n; ++i) utilities += outcome.games_played[i];
    CHECK(utilities == n * (n - 1));
}

TEST_CASE("mean payoff: arithmetic over the node's games, zero when idle") {
    GameOutcome outcome;
    outcome.payoff_sum = {0.5, 0.0};
    outcome.games_played = {2, 0};
    CHECK(outcome.mean_payoff(0) == 0.25); // {1.0, -0.5}
    CHECK(outcome.mean_payoff(1) == 0.0);  // played none

    GameOutcome constant;
    constant.payoff_sum = {3 * 0.7};
    constant.games_played = {3};
    CHECK(near(constant.mean_payoff(0), 0.7));
}

TEST_CASE("sharing costs follow the current values") {
    const auto costs = SharingCosts::from_values(0.2, {0.8, 0.5, 0.0});
    CHECK(near(costs.c[0], 0.16));
    CHECK(near(costs.c[1], 0.1));
    CHECK(costs.c[2] == 0.0);
}
