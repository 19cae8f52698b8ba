#pragma once

#include <cstdint>

#include "commeval/graph.hpp"
#include "commeval/partition.hpp"
#include "commeval/weights.hpp"

namespace commeval {

enum class PerturbStrategy { random, highest_weight, lowest_weight };

std::string_view to_string(PerturbStrategy strategy);

// Reassigns `count` nodes of community `source` to community `target`:
// the count highest-weight nodes, lowest-weight nodes, or a seeded random
// subset. Weight ties break to the lower node index. For fixed (source,
// target, count) all strategies produce identical contingency tables
// against ref. Requires count < smallest community size.
Partition perturb(const Partition& ref, const Graph& g, PerturbStrategy strategy,
                  std::size_t count, const WeightVector& w, std::uint64_t seed,
                  std::size_t source, std::size_t target);

// Convenience overload computing the scheme's weights on (g, ref); the
// random strategy never consults weights.
Partition perturb(const Partition& ref, const Graph& g, PerturbStrategy strategy,
                  std::size_t count, WeightScheme scheme, std::uint64_t seed,
                  std::size_t source, std::size_t target);

} // namespace commeval
