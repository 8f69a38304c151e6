#pragma once

#include "sharesim/matrix.hpp"
#include "sharesim/sharing.hpp"

namespace sharesim {

/// r(i, j) in [0,1]: the reputation node i holds in the eyes of node j.
/// The diagonal is unused and stays untouched.
struct ReputationMatrix {
    MatD r;
    double k_reward = 0.3;
    double k_punish = 0.3;
};

/// Epoch update, per ordered pair (i, j):
///   j gained awareness from i  -> r(i,j) grows by factor (1 + k_reward),
///   i shared with j anyway     -> unchanged (could be useless info, not
///                                 free-riding),
///   otherwise                  -> shrinks by factor (1 - k_punish).
/// Entries are clamped to [0,1]; multiplicative growth can overshoot.
void update_reputation(ReputationMatrix& reputation, const AwarenessMatrix& awareness,
                       const ActionMatrix& actions);

} // namespace sharesim
