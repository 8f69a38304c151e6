#pragma once

#include "sharesim/metrics.hpp"
#include "sharesim/network.hpp"
#include "sharesim/sim.hpp"

#include <nlohmann/json_fwd.hpp>

#include <filesystem>
#include <string>

namespace sharesim::io {

using json = nlohmann::json;

/// "%.9g" rendering used for every float written to a table: compact,
/// byte-stable, and idempotent under a parse/print round trip.
std::string format_g9(double v);

/// Nearest double to the 9-significant-digit rendering of v; what a
/// reader of an exported table will see.
double quantize_g9(double v);

// Network documents: { "n": int, "edges": [ {"from", "to", "weight"} ] }.
DependencyNetwork network_from_json(const json& doc);
json network_to_json(const DependencyNetwork& net);
DependencyNetwork load_network_file(const std::filesystem::path& path);

// Catalogue documents: { "impacts": [float, ...] }.
AttackCatalogue catalogue_from_json(const json& doc);
json catalogue_to_json(const AttackCatalogue& catalogue);

NetworkGenSpec network_gen_from_json(const json& doc);
json network_gen_to_json(const NetworkGenSpec& spec);

/// Run configuration document. `base_dir` anchors a relative network
/// file reference.
RunConfig run_config_from_json(const json& doc, const std::filesystem::path& base_dir = {});
RunConfig load_run_config_file(const std::filesystem::path& path);

/// Canonical echo: the network appears inline (generator spec or explicit
/// edges), never as a file reference.
json run_config_to_json(const RunConfig& config);

json load_json_file(const std::filesystem::path& path);
void write_json_file(const json& doc, const std::filesystem::path& path);

/// Persists a run: summary.json (config echo, per-simulation seeds and
/// catalogues) plus one per-simulation table sim_NNN.csv with header
/// epoch,sim,node,cia,attacked,attack_id,shared_count,mean_payoff,q_in,q_out.
void export_run(const RunResult& result, const std::filesystem::path& dir);

/// Rebuilds a result from an exported directory. Table-level fidelity:
/// values, attacks, share counts, mean payoffs and counters come back
/// (floats at 9-digit precision); per-epoch traces do not.
RunResult import_run(const std::filesystem::path& dir);

void export_mean_cia(const MeanCiaSeries& series, const std::filesystem::path& path);
MeanCiaSeries import_mean_cia(const std::filesystem::path& path);

void export_gain(const GainVector& gains, const std::filesystem::path& path);
GainVector import_gain(const std::filesystem::path& path);

void export_quality(const QualityReport& report, const std::filesystem::path& path);
QualityReport import_quality(const std::filesystem::path& path);

} // namespace sharesim::io
