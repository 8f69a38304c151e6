#pragma once

#include "sharesim/sim.hpp"

#include <cstdint>
#include <vector>

namespace sharesim {

/// Network welfare over time: value averaged over nodes and simulations,
/// one entry per epoch. Non-increasing, since nothing restores value.
struct MeanCiaSeries {
    std::vector<double> per_epoch;
};

MeanCiaSeries mean_cia(const RunResult& result);

/// Per-node value difference at one epoch between a treatment policy run
/// and a baseline run under identical attack streams, averaged over
/// simulations. Positive means the treatment policy left the node better off.
struct GainVector {
    std::uint32_t epoch = 0;
    std::vector<double> g;
};

GainVector gain(const RunResult& baseline, const RunResult& treatment, std::size_t epoch);

/// Per-node tally of useful shares sent/received joined with the gain
/// sign; the scatter data for spotting nodes the community relies on.
struct QualityReport {
    struct Row {
        std::uint32_t node;
        std::uint64_t q_in;
        std::uint64_t q_out;
        double gain;
        bool benefits; // gain > 0
    };
    std::vector<Row> rows;
};

QualityReport quality_report(const RunResult& treatment, const GainVector& gains);

} // namespace sharesim
