#include "sharesim/attack.hpp"

#include "sharesim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace sharesim {

void AttackCatalogue::validate() const {
    if (impacts.empty()) throw ValidationError("catalogue: needs at least one attack");
    for (std::size_t p = 0; p < impacts.size(); ++p) {
        if (impacts[p] < 0.0 || impacts[p] > 1.0)
            throw ValidationError("catalogue: impact " + std::to_string(p) +
                                  " outside [0,1]");
    }
}

namespace {
void require_unit(double v, const char* field) {
    if (v < 0.0 || v > 1.0)
        throw ValidationError(std::string("attack scenario: ") + field +
                              " must lie in [0,1]");
}
} // namespace

void AttackScenarioSpec::validate() const {
    require_unit(active_fraction, "active_fraction");
    require_unit(target_fraction, "target_fraction");
    require_unit(floor_probability, "floor_probability");
    if (catalogue_size == 0)
        throw ValidationError("attack scenario: catalogue_size must be at least 1");
    if (!(impact_min <= impact_mean && impact_mean <= impact_max))
        throw ValidationError(
            "attack scenario: need impact_min <= impact_mean <= impact_max");
    if (impact_sd < 0.0)
        throw ValidationError("attack scenario: impact_sd must be non-negative");
    require_unit(impact_min, "impact_min");
    require_unit(impact_max, "impact_max");
}

std::size_t AttackVector::target_count() const {
    std::size_t c = 0;
    for (auto a : attack_of)
        if (a >= 0) ++c;
    return c;
}

AttackCatalogue sample_catalogue(const AttackScenarioSpec& spec, std::size_t m,
                                 RandomStream& rng) {
    spec.validate();
    AttackCatalogue cat;
    cat.impacts.resize(m);
    for (std::size_t p = 0; p < m; ++p) {
        const double v = rng.next_normal(spec.impact_mean, spec.impact_sd);
        cat.impacts[p] = std::clamp(v, spec.impact_min, spec.impact_max);
    }
    return cat;
}

std::size_t ceil_fraction(double fraction, std::size_t count) {
    if (fraction <= 0.0 || count == 0) return 0;
    // The epsilon guards against products like 0.3*10 landing a hair above
    // the integer they represent.
    const double raw = std::ceil(fraction * static_cast<double>(count) - 1e-9);
    const auto k = static_cast<std::size_t>(std::max(1.0, raw));
    return std::min(k, count);
}

namespace {

// First k entries of a shuffled [0, count) — partial Fisher-Yates.
std::vector<std::uint32_t> draw_without_replacement(std::size_t k, std::size_t count,
                                                    RandomStream& rng) {
    std::vector<std::uint32_t> ids(count);
    std::iota(ids.begin(), ids.end(), 0u);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.next_below(count - i);
        std::swap(ids[i], ids[j]);
    }
    ids.resize(k);
    return ids;
}

} // namespace

AttackVector select_targets(const DependencyNetwork& net, const AttackScenarioSpec& spec,
                            const AttackCatalogue& catalogue, RandomStream& rng) {
    spec.validate();
    catalogue.validate();
    const std::size_t n = net.size();

    AttackVector out;
    out.attack_of.assign(n, AttackVector::kNotTargeted);

    const std::size_t active_count = ceil_fraction(spec.active_fraction, catalogue.size());
    out.active = draw_without_replacement(active_count, catalogue.size(), rng);
    if (active_count == 0) return out; // nothing can strike this epoch

    std::vector<std::size_t> targets;
    switch (spec.strategy) {
    case TargetStrategy::RandomFraction: {
        const std::size_t k = ceil_fraction(spec.target_fraction, n);
        auto drawn = draw_without_replacement(k, n, rng);
        targets.assign(drawn.begin(), drawn.end());
        std::sort(targets.begin(), targets.end());
        break;
    }
    case TargetStrategy::ProportionalInDegree:
    case TargetStrategy::ProportionalOutDegree: {
        const bool use_in = spec.strategy == TargetStrategy::ProportionalInDegree;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t deg = use_in ? net.in_degree(i) : net.out_degree(i);
            const double p = std::max(static_cast<double>(deg) / static_cast<double>(n),
                                      spec.floor_probability);
            if (rng.next_unit() < p) targets.push_back(i);
        }
        break;
    }
    }

    for (std::size_t node : targets) {
        const std::size_t pick = rng.next_below(active_count);
        out.attack_of[node] = static_cast<std::int32_t>(out.active[pick]);
    }
    return out;
}

} // namespace sharesim
