#pragma once

#include <cstddef>
#include <vector>

#include "commeval/partition.hpp"

namespace commeval::detail {

// Symmetric measures are always evaluated in a canonical argument order so
// that swapping x and y cannot perturb floating-point summation order:
// returns true when (y, x) is the canonical orientation.
inline bool swap_for_canonical(const Partition& x, const Partition& y) {
    if (x.part_count() != y.part_count())
        return y.part_count() < x.part_count();
    return y.assignment() < x.assignment();
}

inline double harmonic_mean(double a, double b) {
    if (a + b == 0.0)
        return 0.0;
    return 2.0 * a * b / (a + b);
}

// (total + 2*cells - rows - cols) / total. The grouping keeps a perfect
// match at exactly 1: with cells == rows == cols the inner term cancels
// to zero before `total` is touched.
inline double rand_from_pair_sums(double cells, double rows, double cols, double total) {
    double agree = 2.0 * cells;
    agree -= rows;
    agree -= cols;
    return (total + agree) / total;
}

struct AdjustedRandParts {
    double numerator;
    double denominator;
};

// Chance-corrected numerator/denominator with the shared expected term, so
// identical partitions give bitwise-equal numerator and denominator.
inline AdjustedRandParts adjusted_rand_parts(double cells, double rows, double cols,
                                             double total) {
    const double expected = rows * cols / total;
    return {cells - expected, 0.5 * (rows + cols) - expected};
}

// 2*I(X,Y) / (H(X)+H(Y)) over a row-major joint distribution. Zero cells
// contribute nothing; a zero entropy sum (all mass in one part on both
// sides) reports 1.
double nmi_from_joint(const std::vector<double>& cells, std::size_t rows, std::size_t cols);

} // namespace commeval::detail
