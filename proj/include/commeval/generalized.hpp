#pragma once

#include <span>

#include "commeval/partition.hpp"
#include "commeval/weights.hpp"

namespace commeval {

// Weighted analogue of the joint frequency matrix: cell (i, j) holds the
// normalized weight mass of x_i intersected with y_j.
struct WeightedJointDistribution {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> cells;    // row-major p'_ij
    std::vector<double> row_sums; // p'_i+
    std::vector<double> col_sums; // p'_+j

    double at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }
};

// 1 iff y's part containing u is the majority part of y inside x's part
// containing u. Majority ties break to the lowest community index.
bool node_purity(std::size_t u, const Partition& x, const Partition& y);

// Weight-normalized sum of per-node purities; uniform weights reproduce
// the traditional purity exactly.
double modified_purity(const Partition& x, const Partition& y, const WeightVector& w);

// Harmonic mean of both directions of the modified purity.
double modified_f_measure(const Partition& x, const Partition& y, const WeightVector& w);

// Generalized pair coefficient W(s): sum of w_u*w_v over unordered distinct
// pairs of s. Uniform weights give C(|s|, 2).
double pair_weight(std::span<const std::size_t> subset, const WeightVector& w);

// Rand index with every pair count replaced by the generalized coefficient.
double modified_rand(const Partition& x, const Partition& y, const WeightVector& w);

// Chance-corrected variant; same degenerate-denominator convention as the
// traditional adjusted Rand index.
double modified_adjusted_rand(const Partition& x, const Partition& y, const WeightVector& w);

WeightedJointDistribution weighted_joint(const Partition& x, const Partition& y,
                                         const WeightVector& w);

// NMI evaluated on the weighted joint distribution.
double modified_nmi(const Partition& x, const Partition& y, const WeightVector& w);

} // namespace commeval
