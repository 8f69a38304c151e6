#include "sharesim/propagation.hpp"

#include "sharesim/kernels.hpp"

#include <algorithm>

namespace sharesim {

DirectImpact apply_direct_impacts(NodeValues& values, const ImmunizationMatrix& immunity,
                                  const AttackVector& attacks,
                                  const AttackCatalogue& catalogue) {
    const std::size_t n = values.v.size();
    DirectImpact direct;
    direct.fraction.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int32_t p = attacks.attack_of[i];
        if (p < 0) continue;
        const double f =
            catalogue.impacts[static_cast<std::size_t>(p)] *
            (1.0 - immunity.level(static_cast<std::size_t>(p), i));
        direct.fraction[i] = f;
        values.v[i] = std::max(0.0, values.v[i] - values.v[i] * f);
    }
    return direct;
}

void propagate_impacts(NodeValues& values, const std::vector<double>& epoch_start_values,
                       const DirectImpact& direct, const IndirectServiceMatrix& indirect) {
    const std::size_t n = values.v.size();
    const auto& k = kernels::ops();

    // coef[j] = sum over attacked sources i of fraction_i * B(i, j); the
    // diagonal of B is zero so a source never propagates to itself.
    std::vector<double> coef(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (direct.fraction[i] == 0.0) continue;
        k.axpy(coef.data(), &indirect.weights(i, 0), direct.fraction[i], n);
    }
    k.scaled_sub_clamp(values.v.data(), epoch_start_values.data(), coef.data(), n);
}

void immunize_attacked(ImmunizationMatrix& immunity, const AttackVector& attacks) {
    for (std::size_t i = 0; i < attacks.attack_of.size(); ++i) {
        const std::int32_t p = attacks.attack_of[i];
        if (p >= 0) immunity.level(static_cast<std::size_t>(p), i) = 1.0;
    }
}

} // namespace sharesim
