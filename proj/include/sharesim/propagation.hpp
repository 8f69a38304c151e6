#pragma once

#include "sharesim/attack.hpp"
#include "sharesim/matrix.hpp"
#include "sharesim/network.hpp"

#include <vector>

namespace sharesim {

/// Per-node asset values in [0,1]; the quantity attacks erode.
struct NodeValues {
    std::vector<double> v;
};

/// immunity(p, i) in [0,1]: how well node i mitigates attack p. In the
/// current model entries are 0 until the node is attacked or usefully
/// informed, then 1.
struct ImmunizationMatrix {
    MatD level; // attacks x nodes

    ImmunizationMatrix() = default;
    ImmunizationMatrix(std::size_t attacks, std::size_t nodes) : level(attacks, nodes, 0.0) {}
    bool operator==(const ImmunizationMatrix&) const = default;
};

/// Effective impact fraction per node for this epoch's direct hits:
/// impact * (1 - immunity), 0 for untargeted nodes. Feeds propagation.
struct DirectImpact {
    std::vector<double> fraction;
};

/// Direct damage on targeted nodes: v <- v - v * impact * (1 - immunity),
/// floored at 0, against the epoch-start immunization snapshot.
DirectImpact apply_direct_impacts(NodeValues& values, const ImmunizationMatrix& immunity,
                                  const AttackVector& attacks,
                                  const AttackCatalogue& catalogue);

/// Spreads each source's impact fraction through direct-or-indirect
/// service weights. Reductions accumulate against the epoch-start value
/// snapshot, so the result is independent of source order; receiver
/// immunity does not attenuate propagated damage.
void propagate_impacts(NodeValues& values, const std::vector<double>& epoch_start_values,
                       const DirectImpact& direct, const IndirectServiceMatrix& indirect);

/// Directly attacked nodes become fully immune to the attack they took.
void immunize_attacked(ImmunizationMatrix& immunity, const AttackVector& attacks);

} // namespace sharesim
