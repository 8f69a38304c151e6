#pragma once

#include "sharesim/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sharesim {

struct Edge {
    std::size_t from;
    std::size_t to;
    double weight;
    bool operator==(const Edge&) const = default;
};

/// Weighted directed dependency graph. service(i, j) is the level of
/// service node i offers node j, equivalently j's dependency on i.
/// Weights lie in [0,1], the diagonal is zero.
class DependencyNetwork {
public:
    explicit DependencyNetwork(std::size_t n);

    /// Validates ranges and the zero diagonal; throws ValidationError.
    static DependencyNetwork from_matrix(MatD services);

    std::size_t size() const { return services_.rows(); }
    double service(std::size_t i, std::size_t j) const { return services_(i, j); }
    const MatD& services() const { return services_; }

    /// Adds edge i -> j. Rejects self-loops, duplicates and weights
    /// outside [0,1].
    void add_edge(std::size_t from, std::size_t to, double weight);

    /// Unweighted edge counts.
    std::size_t in_degree(std::size_t node) const;
    std::size_t out_degree(std::size_t node) const;

    std::vector<Edge> edges() const;

    bool operator==(const DependencyNetwork&) const = default;

private:
    MatD services_;
};

/// Parameters for random scale-free generation by preferential attachment.
struct NetworkGenSpec {
    std::size_t n = 0;
    std::size_t attach_count = 2;
    double edge_weight = 0.5;
    std::uint64_t seed = 0;

    void validate() const; // throws ValidationError naming the offending field
};

/// Grows a directed scale-free network: each new node attaches
/// attach_count edges to existing nodes picked proportionally to total
/// degree, each edge oriented uniformly at random, all weights equal.
/// Deterministic in the seed.
DependencyNetwork generate_scale_free(const NetworkGenSpec& spec);

/// Direct-or-indirect service weights: entry (i, j) is the maximum over
/// simple directed paths i -> j of the product of edge weights.
struct IndirectServiceMatrix {
    MatD weights;
    bool operator==(const IndirectServiceMatrix&) const = default;
};

/// Exhaustive depth-first search over simple paths, accumulating each
/// path's product left to right. Exponential in the worst case; fine for
/// the sparse networks this tool works with.
IndirectServiceMatrix compute_indirect_services(const DependencyNetwork& net);

} // namespace sharesim
