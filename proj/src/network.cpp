#include "sharesim/network.hpp"

#include "sharesim/errors.hpp"
#include "sharesim/rng.hpp"

#include <algorithm>
#include <string>

namespace sharesim {

DependencyNetwork::DependencyNetwork(std::size_t n) : services_(n, n, 0.0) {
    if (n == 0) throw ValidationError("network: n must be at least 1");
}

DependencyNetwork DependencyNetwork::from_matrix(MatD services) {
    if (services.rows() == 0 || services.rows() != services.cols())
        throw ValidationError("network: service matrix must be square and non-empty");
    const std::size_t n = services.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double w = services(i, j);
            if (w < 0.0 || w > 1.0)
                throw ValidationError("network: weight at (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") is " + std::to_string(w) +
                                      ", outside [0,1]");
            if (i == j && w != 0.0)
                throw ValidationError("network: nonzero diagonal at node " +
                                      std::to_string(i));
        }
    }
    DependencyNetwork net(n);
    net.services_ = std::move(services);
    return net;
}

void DependencyNetwork::add_edge(std::size_t from, std::size_t to, double weight) {
    const std::size_t n = size();
    if (from >= n || to >= n)
        throw ValidationError("network: edge (" + std::to_string(from) + "," +
                              std::to_string(to) + ") references a node outside [0," +
                              std::to_string(n - 1) + "]");
    if (from == to)
        throw ValidationError("network: self-dependency at node " + std::to_string(from));
    if (weight < 0.0 || weight > 1.0)
        throw ValidationError("network: weight " + std::to_string(weight) +
                              " outside [0,1] on edge (" + std::to_string(from) + "," +
                              std::to_string(to) + ")");
    if (services_(from, to) != 0.0)
        throw ValidationError("network: duplicate edge (" + std::to_string(from) + "," +
                              std::to_string(to) + ")");
    services_(from, to) = weight;
}

std::size_t DependencyNetwork::in_degree(std::size_t node) const {
    std::size_t d = 0;
    for (std::size_t i = 0; i < size(); ++i)
        if (services_(i, node) > 0.0) ++d;
    return d;
}

std::size_t DependencyNetwork::out_degree(std::size_t node) const {
    std::size_t d = 0;
    for (std::size_t j = 0; j < size(); ++j)
        if (services_(node, j) > 0.0) ++d;
    return d;
}

std::vector<Edge> DependencyNetwork::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (services_(i, j) > 0.0) out.push_back({i, j, services_(i, j)});
    return out;
}

void NetworkGenSpec::validate() const {
    if (n == 0) throw ValidationError("network spec: n must be at least 1");
    if (attach_count >= n)
        throw ValidationError("network spec: attach_count must be smaller than n");
    if (!(edge_weight > 0.0) || edge_weight > 1.0)
        throw ValidationError("network spec: edge_weight must lie in (0,1]");
}

DependencyNetwork generate_scale_free(const NetworkGenSpec& spec) {
    spec.validate();
    DependencyNetwork net(spec.n);
    RandomStream rng(spec.seed);

    // Total (in + out) degree, the attachment weight.
    std::vector<std::size_t> degree(spec.n, 0);

    for (std::size_t node = 1; node < spec.n; ++node) {
        const std::size_t attach = std::min(spec.attach_count, node);
        std::vector<std::size_t> targets;
        targets.reserve(attach);
        for (std::size_t k = 0; k < attach; ++k) {
            std::size_t pool = 0;
            for (std::size_t cand = 0; cand < node; ++cand) {
                if (std::find(targets.begin(), targets.end(), cand) != targets.end())
                    continue;
                pool += degree[cand];
            }
            std::size_t chosen;
            if (pool == 0) {
                // Degrees are all zero only while the first edges form;
                // fall back to a uniform pick over remaining candidates.
                std::size_t remaining = node - targets.size();
                std::size_t pick = rng.next_below(remaining);
                chosen = node; // sentinel
                for (std::size_t cand = 0; cand < node; ++cand) {
                    if (std::find(targets.begin(), targets.end(), cand) != targets.end())
                        continue;
                    if (pick == 0) {
                        chosen = cand;
                        break;
                    }
                    --pick;
                }
            } else {
                std::size_t pick = rng.next_below(pool);
                chosen = node;
                for (std::size_t cand = 0; cand < node; ++cand) {
                    if (std::find(targets.begin(), targets.end(), cand) != targets.end())
                        continue;
                    if (pick < degree[cand]) {
                        chosen = cand;
                        break;
                    }
                    pick -= degree[cand];
                }
            }
            targets.push_back(chosen);
            // Orient the edge uniformly at random.
            if (rng.next_u64() & 1u)
                net.add_edge(node, chosen, spec.edge_weight);
            else
                net.add_edge(chosen, node, spec.edge_weight);
            ++degree[node];
            ++degree[chosen];
        }
    }
    return net;
}

namespace {

struct PathSearch {
    const MatD& a;
    std::size_t n;
    std::vector<std::vector<std::size_t>> succ; // adjacency lists
    std::vector<char> visited;
    double* best; // row of B being filled

    void dfs(std::size_t u, double product) {
        visited[u] = 1;
        for (std::size_t v : succ[u]) {
            if (visited[v]) continue;
            const double p = product * a(u, v); // left-to-right accumulation
            if (p > best[v]) best[v] = p;
            dfs(v, p);
        }
        visited[u] = 0;
    }
};

} // namespace

IndirectServiceMatrix compute_indirect_services(const DependencyNetwork& net) {
    const std::size_t n = net.size();
    const MatD& a = net.services();

    PathSearch search{a, n, {}, std::vector<char>(n, 0), nullptr};
    search.succ.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j) > 0.0) search.succ[i].push_back(j);

    IndirectServiceMatrix result{MatD(n, n, 0.0)};
    for (std::size_t src = 0; src < n; ++src) {
        search.best = &result.weights(src, 0);
        search.dfs(src, 1.0);
        result.weights(src, src) = 0.0;
    }
    return result;
}

} // namespace sharesim
