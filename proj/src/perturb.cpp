#include "commeval/perturb.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "commeval/error.hpp"

namespace commeval {

namespace {

// Rejection-sampled bounded draw; unbiased and stable across platforms.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return static_cast<std::size_t>(r % bound);
}

} // namespace

std::string_view to_string(PerturbStrategy strategy) {
    switch (strategy) {
    case PerturbStrategy::random: return "random";
    case PerturbStrategy::highest_weight: return "highest_weight";
    case PerturbStrategy::lowest_weight: return "lowest_weight";
    }
    return "?";
}

Partition perturb(const Partition& ref, const Graph& g, PerturbStrategy strategy,
                  std::size_t count, const WeightVector& w, std::uint64_t seed,
                  std::size_t source, std::size_t target) {
    if (ref.node_count() != g.node_count())
        throw MeasureError("partition does not cover the graph's node set");
    if (source >= ref.part_count() || target >= ref.part_count())
        throw std::invalid_argument("source/target community index out of range");
    if (source == target)
        throw std::invalid_argument("source and target communities must differ");
    if (w.size() != ref.node_count())
        throw MeasureError("weight vector does not cover the node set");
    const std::size_t smallest =
        *std::min_element(ref.part_sizes().begin(), ref.part_sizes().end());
    if (count >= smallest)
        throw MeasureError("perturbation count must be smaller than the smallest community");

    std::vector<std::size_t> members;
    for (std::size_t u = 0; u < ref.node_count(); ++u)
        if (ref.part_of(u) == source)
            members.push_back(u);

    switch (strategy) {
    case PerturbStrategy::random: {
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t j = i + uniform_index(rng, members.size() - i);
            std::swap(members[i], members[j]);
        }
        break;
    }
    case PerturbStrategy::highest_weight:
        std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
            return w[a] != w[b] ? w[a] > w[b] : a < b;
        });
        break;
    case PerturbStrategy::lowest_weight:
        std::sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
            return w[a] != w[b] ? w[a] < w[b] : a < b;
        });
        break;
    }

    std::vector<std::size_t> assignment = ref.assignment();
    for (std::size_t i = 0; i < count; ++i)
        assignment[members[i]] = target;
    return Partition::from_dense(std::move(assignment), ref.part_count());
}

Partition perturb(const Partition& ref, const Graph& g, PerturbStrategy strategy,
                  std::size_t count, WeightScheme scheme, std::uint64_t seed,
                  std::size_t source, std::size_t target) {
    if (strategy == PerturbStrategy::random) {
        WeightVector uniform(std::vector<double>(ref.node_count(), 1.0));
        return perturb(ref, g, strategy, count, uniform, seed, source, target);
    }
    return perturb(ref, g, strategy, count, compute_weights(g, ref, scheme), seed, source,
                   target);
}

} // namespace commeval
