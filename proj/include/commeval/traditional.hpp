#pragma once

#include <cstdint>

#include "commeval/partition.hpp"

namespace commeval {

// Pairwise agreement tallies over all unordered node pairs: together/apart
// in both partitions, or together in exactly one of them.
struct PairCounts {
    std::uint64_t together_both = 0;   // a
    std::uint64_t together_x_only = 0; // b
    std::uint64_t together_y_only = 0; // c
    std::uint64_t apart_both = 0;      // d

    std::uint64_t total() const {
        return together_both + together_x_only + together_y_only + apart_both;
    }

    bool operator==(const PairCounts& other) const = default;
};

// Prevalence-weighted majority overlap of x's parts inside y. Asymmetric:
// purity(estimated, reference) is the usual Purity, the swapped call the
// Inverse Purity.
double purity(const Partition& x, const Partition& y);

// Harmonic mean of purity(x, y) and purity(y, x).
double f_measure(const Partition& x, const Partition& y);

// Computed from the contingency table in O(I*J), never by pair enumeration.
PairCounts pair_counts(const Partition& x, const Partition& y);

// Fraction of pairs treated identically by both partitions.
double rand_index(const Partition& x, const Partition& y);

// Rand index corrected for chance under the fixed-marginals null model.
// At most 1; values <= 0 mean no better than random. When the correction
// denominator vanishes (both partitions all-singletons or all-in-one):
// 1 for identical groupings, 0 otherwise.
double adjusted_rand(const Partition& x, const Partition& y);

// Mutual information normalized by the arithmetic mean of the entropies.
// Both partitions trivial (zero entropy sum) reports 1.
double nmi(const Partition& x, const Partition& y);

} // namespace commeval
