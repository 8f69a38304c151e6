#include "sharesim/sharing.hpp"

#include "sharesim/errors.hpp"

#include <algorithm>
#include <numeric>

namespace sharesim {

void SharingPolicy::validate() const {
    if (kind == Kind::TopDependencyFraction && (!(fraction > 0.0) || fraction > 1.0))
        throw ValidationError("sharing policy: top-dependency fraction must lie in (0,1]");
}

namespace {

// The providers of `node`, strongest service first, ties to the lower id.
std::vector<std::size_t> providers_by_strength(const DependencyNetwork& net,
                                               std::size_t node) {
    std::vector<std::size_t> providers;
    for (std::size_t j = 0; j < net.size(); ++j)
        if (net.service(j, node) > 0.0) providers.push_back(j);
    std::stable_sort(providers.begin(), providers.end(),
                     [&](std::size_t lhs, std::size_t rhs) {
                         return net.service(lhs, node) > net.service(rhs, node);
                     });
    return providers;
}

} // namespace

ActionMatrix decide_actions(const std::vector<SharingPolicy>& policies,
                            const DependencyNetwork& net, const AttackVector& attacks) {
    const std::size_t n = net.size();
    ActionMatrix actions(n, n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!attacks.targeted(i)) continue; // nothing new to share
        const SharingPolicy& policy = policies[i];
        switch (policy.kind) {
        case SharingPolicy::Kind::NoOne:
            break;
        case SharingPolicy::Kind::Broadcast:
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) actions(i, j) = 1;
            break;
        case SharingPolicy::Kind::AllDependencies:
            for (std::size_t j = 0; j < n; ++j)
                if (net.service(j, i) > 0.0) actions(i, j) = 1;
            break;
        case SharingPolicy::Kind::TopDependencyFraction: {
            const auto providers = providers_by_strength(net, i);
            const std::size_t k = ceil_fraction(policy.fraction, providers.size());
            for (std::size_t r = 0; r < k; ++r) actions(i, providers[r]) = 1;
            break;
        }
        }
    }
    return actions;
}

AwarenessMatrix compute_awareness(const ActionMatrix& actions, const AttackVector& attacks,
                                  const ImmunizationMatrix& immunity_snapshot,
                                  std::vector<AwarenessEvent>* events) {
    const std::size_t n = actions.rows();
    AwarenessMatrix aw{MatU8(n, n, 0)};
    for (std::size_t b = 0; b < n; ++b) {
        const std::int32_t p = attacks.attack_of[b];
        if (p < 0) continue;
        for (std::size_t a = 0; a < n; ++a) {
            if (a == b || !actions(b, a)) continue;
            if (immunity_snapshot.level(static_cast<std::size_t>(p), a) >= 1.0) continue;
            aw.w(a, b) = 1;
            if (events)
                events->push_back({static_cast<std::uint32_t>(a),
                                   static_cast<std::uint32_t>(b),
                                   static_cast<std::uint32_t>(p)});
        }
    }
    return aw;
}

SharingCosts SharingCosts::from_values(double cost_coefficient,
                                       const std::vector<double>& values) {
    SharingCosts costs;
    costs.c.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        costs.c[i] = cost_coefficient * values[i];
    return costs;
}

PairUtilities payoff(bool share_ab, bool share_ba, double r_ab, double r_ba, double w_ab,
                     double w_ba, double t_ab, double t_ba, double c_a, double c_b) {
    const double cost_a = c_a / std::max(t_ab, kMinTrustDivisor);
    const double cost_b = c_b / std::max(t_ba, kMinTrustDivisor);
    PairUtilities u{};
    if (share_ab && share_ba) {
        u.u_a = (r_ab + w_ab) - cost_a;
        u.u_b = (r_ba + w_ba) - cost_b;
    } else if (share_ab && !share_ba) {
        u.u_a = r_ab - cost_a;
        u.u_b = (c_b + w_ba) - r_ba;
    } else if (!share_ab && share_ba) {
        u.u_a = (c_a + w_ab) - r_ab;
        u.u_b = r_ba - cost_b;
    } else {
        u.u_a = c_a - (r_ab + w_ab);
        u.u_b = c_b - (r_ba + w_ba);
    }
    return u;
}

GameOutcome play_games(const ActionMatrix& actions, const MatD& reputation,
                       const AwarenessMatrix& awareness, const TrustMatrix& trust,
                       const SharingCosts& costs) {
    const std::size_t n = actions.rows();
    GameOutcome out;
    out.pairs.reserve(n * (n - 1) / 2);
    out.payoff_sum.assign(n, 0.0);
    out.games_played.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const bool share_ab = actions(a, b) != 0;
            const bool share_ba = actions(b, a) != 0;
            const PairUtilities u =
                payoff(share_ab, share_ba, reputation(a, b), reputation(b, a),
                       awareness.w(a, b), awareness.w(b, a), trust.t(a, b), trust.t(b, a),
                       costs.c[a], costs.c[b]);
            out.pairs.push_back({static_cast<std::uint32_t>(a),
                                 static_cast<std::uint32_t>(b),
                                 static_cast<std::uint8_t>(share_ab),
                                 static_cast<std::uint8_t>(share_ba), u.u_a, u.u_b});
            out.payoff_sum[a] += u.u_a;
            out.payoff_sum[b] += u.u_b;
            ++out.games_played[a];
            ++out.games_played[b];
        }
    }
    return out;
}

} // namespace sharesim
