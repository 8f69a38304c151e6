#include "sharesim/metrics.hpp"

#include "sharesim/errors.hpp"
#include "sharesim/kernels.hpp"

#include <string>

namespace sharesim {

MeanCiaSeries mean_cia(const RunResult& result) {
    if (result.sims.empty() || result.sims.front().epochs.empty())
        throw ValidationError("mean_cia: empty run result");
    const auto& k = kernels::ops();
    const std::size_t epochs = result.sims.front().epochs.size();
    const std::size_t sims = result.sims.size();

    MeanCiaSeries series;
    series.per_epoch.resize(epochs);
    for (std::size_t t = 0; t < epochs; ++t) {
        double acc = 0.0;
        for (const SimulationRun& sim : result.sims) {
            const std::vector<double>& v = sim.epochs[t].values;
            acc += k.sum(v.data(), v.size()) / static_cast<double>(v.size());
        }
        series.per_epoch[t] = acc / static_cast<double>(sims);
    }
    return series;
}

GainVector gain(const RunResult& baseline, const RunResult& treatment, std::size_t epoch) {
    if (!baseline.config.paired_compatible_with(treatment.config))
        throw ValidationError("gain: results are not a common-random-number pair");
    if (baseline.sims.size() != treatment.sims.size())
        throw ValidationError("gain: simulation counts differ");
    if (epoch == 0 || epoch > baseline.config.epochs)
        throw ValidationError("gain: epoch " + std::to_string(epoch) + " outside [1," +
                              std::to_string(baseline.config.epochs) + "]");

    const std::size_t n = baseline.network.size();
    const std::size_t sims = baseline.sims.size();
    GainVector out;
    out.epoch = static_cast<std::uint32_t>(epoch);
    out.g.assign(n, 0.0);
    for (std::size_t s = 0; s < sims; ++s) {
        const auto& v_base = baseline.sims[s].epochs[epoch - 1].values;
        const auto& v_treat = treatment.sims[s].epochs[epoch - 1].values;
        for (std::size_t i = 0; i < n; ++i) out.g[i] += v_treat[i] - v_base[i];
    }
    for (std::size_t i = 0; i < n; ++i) out.g[i] /= static_cast<double>(sims);
    return out;
}

QualityReport quality_report(const RunResult& treatment, const GainVector& gains) {
    const std::size_t n = treatment.network.size();
    if (gains.g.size() != n)
        throw ValidationError("quality_report: gain vector size does not match network");

    // Counters are cumulative; totals over simulations come from each
    // simulation's final record.
    std::vector<std::uint64_t> q_in(n, 0), q_out(n, 0);
    for (const SimulationRun& sim : treatment.sims) {
        const EpochRecord& last = sim.epochs.back();
        for (std::size_t i = 0; i < n; ++i) {
            q_in[i] += last.q_in[i];
            q_out[i] += last.q_out[i];
        }
    }

    QualityReport report;
    report.rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        report.rows.push_back({static_cast<std::uint32_t>(i), q_in[i], q_out[i],
                               gains.g[i], gains.g[i] > 0.0});
    }
    return report;
}

} // namespace sharesim
