#include "commeval/planted.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace commeval {

namespace {

// Canonical 53-bit uniform in [0, 1); bit-stable across standard libraries.
double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

std::pair<Graph, Partition> generate_planted(const PlantedConfig& cfg) {
    if (cfg.nodes < 1)
        throw std::invalid_argument("planted model needs at least one node");
    if (cfg.communities < 1 || cfg.communities > cfg.nodes)
        throw std::invalid_argument("community count must lie in [1, n]");
    if (!(cfg.p_out >= 0.0) || !(cfg.p_in <= 1.0) || !(cfg.p_out <= cfg.p_in))
        throw std::invalid_argument("edge probabilities must satisfy 0 <= p_out <= p_in <= 1");

    // Contiguous near-equal blocks; the first n % k communities get the
    // extra node.
    std::vector<std::size_t> assignment(cfg.nodes);
    const std::size_t base = cfg.nodes / cfg.communities;
    const std::size_t extra = cfg.nodes % cfg.communities;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cfg.communities; ++c) {
        const std::size_t size = base + (c < extra ? 1 : 0);
        for (std::size_t i = 0; i < size; ++i)
            assignment[next++] = c;
    }

    std::vector<std::string> labels(cfg.nodes);
    for (std::size_t u = 0; u < cfg.nodes; ++u)
        labels[u] = std::to_string(u);

    std::mt19937_64 rng(cfg.seed);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < cfg.nodes; ++u)
        for (std::size_t v = u + 1; v < cfg.nodes; ++v) {
            const double p = assignment[u] == assignment[v] ? cfg.p_in : cfg.p_out;
            if (unit_uniform(rng) < p)
                edges.push_back({u, v, 1.0});
        }

    return {Graph(std::move(labels), edges),
            Partition::from_dense(std::move(assignment), cfg.communities)};
}

} // namespace commeval
