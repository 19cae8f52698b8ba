#pragma once

// Fixtures and independent oracles shared by the unit and acceptance
// suites. The oracles deliberately avoid the library's computation paths:
// pair tallies walk all node pairs, pair weights sum explicit products.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "commeval/graph.hpp"
#include "commeval/partition.hpp"
#include "commeval/traditional.hpp"
#include "commeval/weights.hpp"

namespace testutil {

// Canonical ten-node fixture: reference {1..6 | 7..10}; estimate A moves
// node 2 into the second community, estimate B moves node 6.
inline commeval::Partition fig1_reference() {
    return commeval::Partition({0, 0, 0, 0, 0, 0, 1, 1, 1, 1});
}

inline commeval::Partition fig1_estimate_a() {
    return commeval::Partition({0, 1, 0, 0, 0, 0, 1, 1, 1, 1});
}

inline commeval::Partition fig1_estimate_b() {
    return commeval::Partition({0, 0, 0, 0, 0, 1, 1, 1, 1, 1});
}

// A graph realizing the fixture's topology contrast: node 2 is the first
// community's hub (five internal edges, embeddedness 1) while node 6 hangs
// off it with one internal and one external edge.
inline commeval::Graph fig1_graph() {
    std::vector<std::string> labels;
    for (int i = 1; i <= 10; ++i)
        labels.push_back(std::to_string(i));
    const std::vector<commeval::Edge> edges = {
        {0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {0, 2}, {3, 4},
        {6, 7}, {7, 8}, {8, 9}, {6, 9}, {6, 8}, {5, 6},
    };
    return commeval::Graph(std::move(labels), edges);
}

// Two disjoint triangles a-b-c and d-e-f.
inline commeval::Graph two_triangles() {
    return commeval::Graph({"a", "b", "c", "d", "e", "f"},
                           {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

// Star with center "c" and three leaves.
inline commeval::Graph star4() {
    return commeval::Graph({"c", "l1", "l2", "l3"}, {{0, 1}, {0, 2}, {0, 3}});
}

inline std::size_t bounded(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

inline double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline commeval::Partition random_partition(std::mt19937_64& rng, std::size_t n,
                                            std::size_t max_parts) {
    std::vector<std::size_t> ids(n);
    const std::size_t k = 1 + bounded(rng, max_parts);
    for (std::size_t u = 0; u < n; ++u)
        ids[u] = bounded(rng, k);
    return commeval::Partition(ids);
}

inline commeval::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p,
                                    bool weighted = false) {
    std::vector<std::string> labels(n);
    for (std::size_t u = 0; u < n; ++u)
        labels[u] = "n" + std::to_string(u);
    std::vector<commeval::Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (unit(rng) < p) {
                const double w = weighted ? 0.25 * (1 + bounded(rng, 12)) : 1.0;
                edges.push_back({u, v, w});
            }
    return commeval::Graph(std::move(labels), edges);
}

// Dyadic weights (multiples of 1/8): sums and pairwise products stay exact
// in double arithmetic, so dual-route comparisons can demand bitwise
// equality.
inline std::vector<double> random_dyadic_weights(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> w(n);
    for (std::size_t u = 0; u < n; ++u)
        w[u] = 0.125 * static_cast<double>(bounded(rng, 33));
    w[bounded(rng, n)] = 1.0; // keep the total positive
    return w;
}

inline std::vector<double> random_real_weights(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> w(n);
    for (std::size_t u = 0; u < n; ++u)
        w[u] = bounded(rng, 8) == 0 ? 0.0 : 2.0 * unit(rng);
    w[bounded(rng, n)] = 0.5 + unit(rng);
    return w;
}

// O(n^2) enumeration over all unordered node pairs.
inline commeval::PairCounts brute_pair_counts(const commeval::Partition& x,
                                              const commeval::Partition& y) {
    commeval::PairCounts pc;
    for (std::size_t u = 0; u < x.node_count(); ++u)
        for (std::size_t v = u + 1; v < x.node_count(); ++v) {
            const bool sx = x.part_of(u) == x.part_of(v);
            const bool sy = y.part_of(u) == y.part_of(v);
            if (sx && sy)
                ++pc.together_both;
            else if (sx)
                ++pc.together_x_only;
            else if (sy)
                ++pc.together_y_only;
            else
                ++pc.apart_both;
        }
    return pc;
}

// Explicit sum of w_u * w_v over unordered distinct pairs.
inline double brute_pair_weight(std::span<const std::size_t> subset,
                                const commeval::WeightVector& w) {
    double total = 0.0;
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            total += w[subset[i]] * w[subset[j]];
    return total;
}

} // namespace testutil
