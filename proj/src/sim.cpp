#include "sharesim/sim.hpp"

#include "sharesim/errors.hpp"
#include "sharesim/rng.hpp"

#include <algorithm>
#include <string>

namespace sharesim {

namespace {

constexpr std::uint64_t kAttackStreamTag = 0xA77ACC;
constexpr std::uint64_t kAuxStreamTag = 0xA0B1;

void require_unit(double v, const char* field) {
    if (v < 0.0 || v > 1.0)
        throw ValidationError(std::string("run config: ") + field + " must lie in [0,1]");
}

} // namespace

void RunConfig::validate() const {
    if (network_gen.has_value() == network.has_value())
        throw ValidationError(
            "run config: exactly one of generated or explicit network required");
    if (network_gen) network_gen->validate();
    scenario.validate();
    policy.validate();
    if (catalogue_impacts) {
        AttackCatalogue cat{*catalogue_impacts};
        cat.validate();
    }
    if (epochs == 0) throw ValidationError("run config: epochs must be at least 1");
    if (simulations == 0)
        throw ValidationError("run config: simulations must be at least 1");
    require_unit(initial_cia, "initial_cia");
    require_unit(initial_trust, "initial_trust");
    require_unit(initial_reputation, "initial_reputation");
    require_unit(cost_coefficient, "cost_coefficient");
    require_unit(reputation_reward, "reputation_reward");
    require_unit(reputation_punish, "reputation_punish");
}

bool RunConfig::paired_compatible_with(const RunConfig& other) const {
    RunConfig a = *this;
    RunConfig b = other;
    a.policy = SharingPolicy{};
    b.policy = SharingPolicy{};
    a.record_trace = b.record_trace = false;
    return a.network_gen == b.network_gen && a.network == b.network &&
           a.scenario.strategy == b.scenario.strategy &&
           a.scenario.active_fraction == b.scenario.active_fraction &&
           a.scenario.target_fraction == b.scenario.target_fraction &&
           a.scenario.floor_probability == b.scenario.floor_probability &&
           a.scenario.catalogue_size == b.scenario.catalogue_size &&
           a.scenario.impact_mean == b.scenario.impact_mean &&
           a.scenario.impact_sd == b.scenario.impact_sd &&
           a.scenario.impact_min == b.scenario.impact_min &&
           a.scenario.impact_max == b.scenario.impact_max &&
           a.catalogue_impacts == b.catalogue_impacts && a.epochs == b.epochs &&
           a.simulations == b.simulations && a.master_seed == b.master_seed &&
           a.initial_cia == b.initial_cia && a.initial_trust == b.initial_trust &&
           a.initial_reputation == b.initial_reputation &&
           a.cost_coefficient == b.cost_coefficient &&
           a.reputation_reward == b.reputation_reward &&
           a.reputation_punish == b.reputation_punish;
}

DependencyNetwork resolve_network(const RunConfig& config) {
    if (config.network) return *config.network;
    return generate_scale_free(*config.network_gen);
}

void apply_sharing_costs(NodeValues& values, const ActionMatrix& actions,
                         const AttackVector& attacks,
                         const ImmunizationMatrix& immunity_snapshot,
                         const GameOutcome& games, const SharingCosts& costs) {
    const std::size_t n = values.v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::int32_t p = attacks.attack_of[i];
        if (p < 0) continue;
        if (immunity_snapshot.level(static_cast<std::size_t>(p), i) >= 1.0) continue;
        bool shared_any = false;
        for (std::size_t j = 0; j < n && !shared_any; ++j)
            shared_any = actions(i, j) != 0;
        if (!shared_any) continue;
        if (games.mean_payoff(i) >= 0.0) continue;
        values.v[i] = std::max(0.0, values.v[i] - costs.c[i]);
    }
}

RunResult run(const RunConfig& config, const EpochObserver& observer) {
    config.validate();

    RunResult result;
    result.config = config;
    result.network = resolve_network(config);

    const DependencyNetwork& net = result.network;
    const std::size_t n = net.size();
    const IndirectServiceMatrix indirect = compute_indirect_services(net);
    const std::vector<SharingPolicy> policies(n, config.policy);

    result.sims.reserve(config.simulations);
    for (std::size_t s = 0; s < config.simulations; ++s) {
        SimulationRun sim;
        sim.attack_seed = derive_seed(config.master_seed, s, kAttackStreamTag);
        sim.aux_seed = derive_seed(config.master_seed, s, kAuxStreamTag);
        RandomStream attack_rng(sim.attack_seed);
        RandomStream aux_rng(sim.aux_seed);
        (void)aux_rng; // reserved for policies that draw randomness

        sim.catalogue =
            config.catalogue_impacts
                ? AttackCatalogue{*config.catalogue_impacts}
                : sample_catalogue(config.scenario, config.scenario.catalogue_size,
                                   attack_rng);
        sim.catalogue.validate();

        NodeValues values{std::vector<double>(n, config.initial_cia)};
        ImmunizationMatrix immunity(sim.catalogue.size(), n);
        TrustMatrix trust{MatD(n, n, config.initial_trust)};
        ReputationMatrix reputation{MatD(n, n, config.initial_reputation),
                                    config.reputation_reward, config.reputation_punish};
        for (std::size_t i = 0; i < n; ++i) reputation.r(i, i) = 0.0;

        std::vector<std::uint64_t> q_in(n, 0), q_out(n, 0);

        sim.epochs.reserve(config.epochs);
        for (std::size_t e = 1; e <= config.epochs; ++e) {
            // Epoch-start snapshots: impacts, awareness and costs are all
            // judged against the state before this epoch's attacks land.
            const std::vector<double> start_values = values.v;
            const ImmunizationMatrix start_immunity = immunity;
            const SharingCosts costs =
                SharingCosts::from_values(config.cost_coefficient, start_values);

            const AttackVector attacks =
                select_targets(net, config.scenario, sim.catalogue, attack_rng);

            const DirectImpact direct =
                apply_direct_impacts(values, start_immunity, attacks, sim.catalogue);
            propagate_impacts(values, start_values, direct, indirect);

            const ActionMatrix actions = decide_actions(policies, net, attacks);
            std::vector<AwarenessEvent> events;
            const AwarenessMatrix awareness =
                compute_awareness(actions, attacks, start_immunity, &events);
            const GameOutcome games =
                play_games(actions, reputation.r, awareness, trust, costs);

            apply_sharing_costs(values, actions, attacks, start_immunity, games, costs);

            immunize_attacked(immunity, attacks);
            for (const AwarenessEvent& ev : events)
                immunity.level(ev.attack, ev.receiver) = 1.0;

            update_reputation(reputation, awareness, actions);

            for (const AwarenessEvent& ev : events) {
                ++q_in[ev.receiver];
                ++q_out[ev.provider];
            }

            EpochRecord record;
            record.epoch = static_cast<std::uint32_t>(e);
            record.values = values.v;
            record.attack_of = attacks.attack_of;
            record.shared_count.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                std::uint32_t count = 0;
                for (std::size_t j = 0; j < n; ++j) count += actions(i, j);
                record.shared_count[i] = count;
            }
            record.mean_payoff.resize(n);
            for (std::size_t i = 0; i < n; ++i) record.mean_payoff[i] = games.mean_payoff(i);
            record.awareness = events;
            record.q_in = q_in;
            record.q_out = q_out;
            if (config.record_trace)
                record.trace = EpochTrace{actions, reputation.r, games.pairs};
            sim.epochs.push_back(std::move(record));

            if (observer)
                observer(EpochState{s, e, values, immunity, reputation, awareness,
                                    attacks, actions, games});
        }
        result.sims.push_back(std::move(sim));
    }
    return result;
}

std::vector<RunResult> run_paired(const std::vector<RunConfig>& configs,
                                  const EpochObserver& observer) {
    if (configs.empty()) throw ValidationError("run_paired: no configurations given");
    for (std::size_t i = 1; i < configs.size(); ++i) {
        if (!configs[0].paired_compatible_with(configs[i]))
            throw ValidationError(
                "run_paired: configuration " + std::to_string(i) +
                " differs from the first in more than the sharing policy");
    }
    std::vector<RunResult> results;
    results.reserve(configs.size());
    for (const RunConfig& config : configs) results.push_back(run(config, observer));
    return results;
}

} // namespace sharesim
