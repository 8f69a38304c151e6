#pragma once

#include "sharesim/attack.hpp"
#include "sharesim/network.hpp"
#include "sharesim/propagation.hpp"
#include "sharesim/reputation.hpp"
#include "sharesim/sharing.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace sharesim {

/// Full experiment description. The network comes either from a generator
/// spec or as an explicit instance (exactly one must be set).
struct RunConfig {
    std::optional<NetworkGenSpec> network_gen;
    std::optional<DependencyNetwork> network;

    AttackScenarioSpec scenario;
    SharingPolicy policy;

    /// Fixed catalogue impacts; when absent each simulation samples its
    /// own catalogue from its attack stream.
    std::optional<std::vector<double>> catalogue_impacts;

    std::size_t epochs = 1;
    std::size_t simulations = 1;
    std::uint64_t master_seed = 0;

    double initial_cia = 0.8;
    double initial_trust = 0.5;
    double initial_reputation = 0.5;
    double cost_coefficient = 0.2;  // sharing cost as a share of node value
    double reputation_reward = 0.3;
    double reputation_punish = 0.3;

    /// Keep per-epoch action/reputation/payoff traces in the records.
    /// Meant for tests and small runs; the exported tables never need it.
    bool record_trace = false;

    void validate() const;

    /// True when the two configs differ in nothing but the sharing policy,
    /// the precondition for common-random-number pairing.
    bool paired_compatible_with(const RunConfig& other) const;
};

struct EpochTrace {
    ActionMatrix actions;
    MatD reputation;
    std::vector<PairPayoff> payoffs;
};

/// End-of-epoch snapshot of everything the metrics and tables consume.
struct EpochRecord {
    std::uint32_t epoch = 0; // 1-based
    std::vector<double> values;
    std::vector<std::int32_t> attack_of;
    std::vector<std::uint32_t> shared_count;
    std::vector<double> mean_payoff;
    std::vector<AwarenessEvent> awareness;
    std::vector<std::uint64_t> q_in;  // cumulative useful shares received
    std::vector<std::uint64_t> q_out; // cumulative useful shares sent
    std::optional<EpochTrace> trace;
};

struct SimulationRun {
    std::uint64_t attack_seed = 0;
    std::uint64_t aux_seed = 0;
    AttackCatalogue catalogue;
    std::vector<EpochRecord> epochs;
};

struct RunResult {
    RunConfig config;
    DependencyNetwork network{1};
    std::vector<SimulationRun> sims;
};

/// Live state handed to the observer after each epoch; references stay
/// valid only during the call.
struct EpochState {
    std::size_t simulation;
    std::size_t epoch; // 1-based
    const NodeValues& values;
    const ImmunizationMatrix& immunity;
    const ReputationMatrix& reputation;
    const AwarenessMatrix& awareness;
    const AttackVector& attacks;
    const ActionMatrix& actions;
    const GameOutcome& games;
};
using EpochObserver = std::function<void(const EpochState&)>;

/// The network instance a config describes (generated or explicit).
DependencyNetwork resolve_network(const RunConfig& config);

/// Sharing cost: a targeted, previously unimmunized node that shared with
/// anyone and ended the epoch with negative mean payoff loses its epoch-
/// start cost from its value.
void apply_sharing_costs(NodeValues& values, const ActionMatrix& actions,
                         const AttackVector& attacks,
                         const ImmunizationMatrix& immunity_snapshot,
                         const GameOutcome& games, const SharingCosts& costs);

/// Runs the full experiment: per simulation, seeds derived from the master
/// seed feed an attack stream (catalogue + targeting) and an auxiliary
/// stream reserved for policy-dependent draws, then the epoch loop runs
/// attack generation, impact propagation, the sharing game, cost and
/// immunization updates and the reputation step. Bit-deterministic in the
/// config.
RunResult run(const RunConfig& config, const EpochObserver& observer = {});

/// Runs configs that differ only in sharing policy under common random
/// numbers, so attack sequences match element for element across results.
std::vector<RunResult> run_paired(const std::vector<RunConfig>& configs,
                                  const EpochObserver& observer = {});

} // namespace sharesim
