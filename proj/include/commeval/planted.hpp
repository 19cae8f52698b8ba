#pragma once

#include <cstdint>
#include <utility>

#include "commeval/graph.hpp"
#include "commeval/partition.hpp"

namespace commeval {

// Planted-partition model: k near-equal communities (sizes differ by at
// most one), intra-pair edge probability p_in, inter-pair p_out.
struct PlantedConfig {
    std::size_t nodes = 0;
    std::size_t communities = 1;
    double p_in = 1.0;
    double p_out = 0.0;
    std::uint64_t seed = 0;
};

// Deterministic for a given config: identical seeds produce identical
// graphs including node index order. Node labels are "0".."n-1".
std::pair<Graph, Partition> generate_planted(const PlantedConfig& cfg);

} // namespace commeval
