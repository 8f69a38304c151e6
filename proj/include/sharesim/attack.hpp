#pragma once

#include "sharesim/network.hpp"
#include "sharesim/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sharesim {

/// The threat catalogue: one default impact per attack type, each in [0,1].
struct AttackCatalogue {
    std::vector<double> impacts;

    std::size_t size() const { return impacts.size(); }
    void validate() const; // m >= 1, impacts within [0,1]
};

enum class TargetStrategy {
    RandomFraction,        // fixed fraction of nodes, chosen uniformly
    ProportionalInDegree,  // each node hit with prob max(in_degree/n, floor)
    ProportionalOutDegree, // same with out-degree
};

struct AttackScenarioSpec {
    TargetStrategy strategy = TargetStrategy::RandomFraction;
    double active_fraction = 0.3;   // share of the catalogue active per epoch
    double target_fraction = 0.05;  // RandomFraction only
    double floor_probability = 0.02;
    std::size_t catalogue_size = 10;
    double impact_mean = 0.4;
    double impact_sd = 0.2;
    double impact_min = 0.2;
    double impact_max = 0.6;

    void validate() const;
};

/// Per-epoch assignment of attacks to targets. attack_of[i] is the attack
/// id hitting node i, or kNotTargeted. active lists the attack ids that
/// were drawn for the epoch; assignments come only from this subset.
struct AttackVector {
    static constexpr std::int32_t kNotTargeted = -1;

    std::vector<std::int32_t> attack_of;
    std::vector<std::uint32_t> active;

    bool targeted(std::size_t node) const { return attack_of[node] >= 0; }
    std::size_t target_count() const;
};

/// Draws the catalogue impacts from a clamped normal distribution.
AttackCatalogue sample_catalogue(const AttackScenarioSpec& spec, std::size_t m,
                                 RandomStream& rng);

/// Rounds fraction * count up; at least 1 whenever fraction > 0 and
/// count > 0, capped at count.
std::size_t ceil_fraction(double fraction, std::size_t count);

/// One epoch of adversary behaviour: draw the active attack subset, pick
/// targets per the strategy, assign each target an active attack uniformly.
AttackVector select_targets(const DependencyNetwork& net, const AttackScenarioSpec& spec,
                            const AttackCatalogue& catalogue, RandomStream& rng);

} // namespace sharesim
