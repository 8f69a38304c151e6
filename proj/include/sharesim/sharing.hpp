#pragma once

#include "sharesim/attack.hpp"
#include "sharesim/matrix.hpp"
#include "sharesim/network.hpp"
#include "sharesim/propagation.hpp"

#include <cstdint>
#include <vector>

namespace sharesim {

/// Audience rule a node applies when it has attack information to share.
struct SharingPolicy {
    enum class Kind {
        NoOne,                 // never share
        TopDependencyFraction, // strongest providers, ceil(fraction * provider count)
        AllDependencies,       // every provider
        Broadcast,             // everyone else
    };

    Kind kind = Kind::NoOne;
    double fraction = 0.0; // TopDependencyFraction only, in (0,1]

    void validate() const;
    bool operator==(const SharingPolicy&) const = default;
};

/// actions(i, j) == 1 iff node i shares with node j this epoch.
using ActionMatrix = MatU8;

/// Targeted nodes share toward their policy audience; everyone else
/// plays not-share toward everyone.
ActionMatrix decide_actions(const std::vector<SharingPolicy>& policies,
                            const DependencyNetwork& net, const AttackVector& attacks);

/// w(a, b) == 1 iff node a gained a new immunization from node b this
/// epoch: b shared with a, b is under attack, and a was not already
/// immunized against that attack at epoch start.
struct AwarenessMatrix {
    MatU8 w;
};

/// A useful share: `receiver` becomes immune to `attack` thanks to
/// `provider`. Applied to the immunization matrix at epoch end.
struct AwarenessEvent {
    std::uint32_t receiver;
    std::uint32_t provider;
    std::uint32_t attack;
    bool operator==(const AwarenessEvent&) const = default;
};

AwarenessMatrix compute_awareness(const ActionMatrix& actions, const AttackVector& attacks,
                                  const ImmunizationMatrix& immunity_snapshot,
                                  std::vector<AwarenessEvent>* events = nullptr);

/// trust(i, j) in [0,1]: how much i trusts j; scales down i's sharing
/// cost toward j. Static over a run.
struct TrustMatrix {
    MatD t;
};

/// Per-node sharing cost, cost_coefficient * value, refreshed from the
/// epoch-start values.
struct SharingCosts {
    std::vector<double> c;

    static SharingCosts from_values(double cost_coefficient,
                                    const std::vector<double>& values);
};

/// Guard for the cost/trust ratio when trust is zero.
inline constexpr double kMinTrustDivisor = 1e-6;

/// One cell of the two-player payoff table. share_ab is A's action toward
/// B, share_ba is B's toward A; r/w/t/c follow the same directional
/// naming (r_ab: reputation A receives from B, t_ab: trust A places in B).
struct PairUtilities {
    double u_a;
    double u_b;
};
PairUtilities payoff(bool share_ab, bool share_ba, double r_ab, double r_ba, double w_ab,
                     double w_ba, double t_ab, double t_ba, double c_a, double c_b);

struct PairPayoff {
    std::uint32_t a;
    std::uint32_t b;
    std::uint8_t share_ab;
    std::uint8_t share_ba;
    double u_a;
    double u_b;
};

/// Every unordered pair plays once per epoch: n*(n-1)/2 games, n*(n-1)
/// utilities.
struct GameOutcome {
    std::vector<PairPayoff> pairs;
    std::vector<double> payoff_sum;        // per node, over its games
    std::vector<std::uint32_t> games_played;

    /// Mean utility of a node over its games this epoch; 0 with no games.
    double mean_payoff(std::size_t node) const {
        return games_played[node] == 0
                   ? 0.0
                   : payoff_sum[node] / static_cast<double>(games_played[node]);
    }
};

GameOutcome play_games(const ActionMatrix& actions, const MatD& reputation,
                       const AwarenessMatrix& awareness, const TrustMatrix& trust,
                       const SharingCosts& costs);

} // namespace sharesim
