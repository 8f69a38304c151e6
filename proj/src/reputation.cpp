#include "sharesim/reputation.hpp"

#include "sharesim/kernels.hpp"

#include <vector>

namespace sharesim {

void update_reputation(ReputationMatrix& reputation, const AwarenessMatrix& awareness,
                       const ActionMatrix& actions) {
    const std::size_t n = reputation.r.rows();
    const double reward_factor = 1.0 + reputation.k_reward;
    const double punish_factor = 1.0 - reputation.k_punish;
    const auto& k = kernels::ops();

    std::vector<std::uint8_t> rewarded(n);
    for (std::size_t i = 0; i < n; ++i) {
        // rewarded[j]: j gained awareness from i; held[j]: i shared with j.
        for (std::size_t j = 0; j < n; ++j) rewarded[j] = awareness.w(j, i);
        const std::uint8_t* held = &actions(i, 0);

        const double diagonal = reputation.r(i, i);
        k.reputation_step(&reputation.r(i, 0), rewarded.data(), held, reward_factor,
                          punish_factor, n);
        reputation.r(i, i) = diagonal;
    }
}

} // namespace sharesim
