// Command line front end: generate networks, run experiments, compare
// sharing policies under common random numbers, and aggregate results.

#include "sharesim/errors.hpp"
#include "sharesim/io.hpp"
#include "sharesim/kernels.hpp"
#include "sharesim/metrics.hpp"
#include "sharesim/sim.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>

namespace {

using namespace sharesim;

int cmd_generate(const std::string& spec_path, const std::string& out_path) {
    const NetworkGenSpec spec =
        io::network_gen_from_json(io::load_json_file(spec_path));
    const DependencyNetwork net = generate_scale_free(spec);
    io::write_json_file(io::network_to_json(net), out_path);
    std::cout << "wrote " << out_path << " (" << net.size() << " nodes, "
              << net.edges().size() << " edges)\n";
    return 0;
}

int cmd_run(const std::string& config_path, const std::string& out_dir) {
    const RunConfig config = io::load_run_config_file(config_path);
    const RunResult result = run(config);
    io::export_run(result, out_dir);
    const MeanCiaSeries series = mean_cia(result);
    std::cout << "ran " << result.sims.size() << " simulation(s) x " << config.epochs
              << " epoch(s); final mean CIA " << io::format_g9(series.per_epoch.back())
              << "; results in " << out_dir << "\n";
    return 0;
}

int cmd_compare(const std::string& config_a, const std::string& config_b,
                std::size_t epoch, const std::string& out_dir) {
    const RunConfig baseline = io::load_run_config_file(config_a);
    const RunConfig treatment = io::load_run_config_file(config_b);
    const std::vector<RunResult> results = run_paired({baseline, treatment});

    const GainVector gains = gain(results[0], results[1], epoch);
    const QualityReport quality = quality_report(results[1], gains);

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir = out_dir;
    io::export_run(results[0], dir / "run_a");
    io::export_run(results[1], dir / "run_b");
    io::export_gain(gains, dir / "gain.csv");
    io::export_quality(quality, dir / "quality.csv");

    const MeanCiaSeries series_a = mean_cia(results[0]);
    const MeanCiaSeries series_b = mean_cia(results[1]);
    io::write_json_file(
        io::json{{"epoch", epoch},
                 {"mean_cia_a", io::quantize_g9(series_a.per_epoch[epoch - 1])},
                 {"mean_cia_b", io::quantize_g9(series_b.per_epoch[epoch - 1])},
                 {"config_a", io::run_config_to_json(baseline)},
                 {"config_b", io::run_config_to_json(treatment)}},
        dir / "compare_summary.json");
    std::cout << "mean CIA at epoch " << epoch << ": a="
              << io::format_g9(series_a.per_epoch[epoch - 1])
              << " b=" << io::format_g9(series_b.per_epoch[epoch - 1])
              << "; gain/quality tables in " << out_dir << "\n";
    return 0;
}

int cmd_analyze(const std::string& results_dir, const std::string& out_dir) {
    const RunResult result = io::import_run(results_dir);
    const MeanCiaSeries series = mean_cia(result);
    std::filesystem::create_directories(out_dir);
    io::export_mean_cia(series, std::filesystem::path(out_dir) / "mean_cia.csv");
    std::cout << "mean CIA: start " << io::format_g9(series.per_epoch.front())
              << ", final " << io::format_g9(series.per_epoch.back()) << "; series in "
              << out_dir << "/mean_cia.csv\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Attack-impact propagation and information-sharing simulator"};
    app.require_subcommand(1);

    std::string spec_path, out_path, config_path, out_dir;
    std::string config_a, config_b, results_dir;
    std::size_t epoch = 1;

    auto* generate = app.add_subcommand("generate", "Generate a scale-free network");
    generate->add_option("--spec", spec_path, "Generator spec document")->required();
    generate->add_option("--out", out_path, "Output network document")->required();

    auto* run_cmd = app.add_subcommand("run", "Run one experiment configuration");
    run_cmd->add_option("--config", config_path, "Run configuration document")->required();
    run_cmd->add_option("--out", out_dir, "Output directory")->required();

    auto* compare = app.add_subcommand(
        "compare", "Run two configs differing only in sharing policy under common "
                   "random numbers; emit per-node gain (b minus a) and quality tables");
    compare->add_option("--config-a", config_a, "Baseline configuration")->required();
    compare->add_option("--config-b", config_b, "Treatment configuration")->required();
    compare->add_option("--epoch", epoch, "Epoch to evaluate gains at (1-based)")
        ->required();
    compare->add_option("--out", out_dir, "Output directory")->required();

    auto* analyze = app.add_subcommand("analyze", "Aggregate an exported run directory");
    analyze->add_option("--results", results_dir, "Directory written by 'run'")
        ->required();
    analyze->add_option("--out", out_dir, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate) return cmd_generate(spec_path, out_path);
        if (*run_cmd) return cmd_run(config_path, out_dir);
        if (*compare) return cmd_compare(config_a, config_b, epoch, out_dir);
        if (*analyze) return cmd_analyze(results_dir, out_dir);
    } catch (const sharesim::ValidationError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
