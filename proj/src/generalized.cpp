#include "commeval/generalized.hpp"

#include <cmath>

#include "commeval/error.hpp"
#include "measure_common.hpp"

namespace commeval {

namespace {

void check_coverage(const Partition& x, const Partition& y, const WeightVector& w) {
    if (x.node_count() != y.node_count())
        throw MeasureError("partitions cover different node sets");
    if (w.size() != x.node_count())
        throw MeasureError("weight vector does not cover the node set");
}

// Majority part of y inside each part of x, ties to the lowest index.
std::vector<std::size_t> majority_columns(const ContingencyTable& t) {
    std::vector<std::size_t> best(t.rows, 0);
    for (std::size_t i = 0; i < t.rows; ++i) {
        std::size_t best_count = t.at(i, 0);
        for (std::size_t j = 1; j < t.cols; ++j)
            if (t.at(i, j) > best_count) {
                best_count = t.at(i, j);
                best[i] = j;
            }
    }
    return best;
}

double pairs_from_sums(double weight_sum, double weight_sq_sum) {
    return 0.5 * (weight_sum * weight_sum - weight_sq_sum);
}

// Per-cell weight masses and their squares, accumulated in node order.
struct CellWeights {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> sum;    // row-major sum of w_u per cell
    std::vector<double> sq_sum; // row-major sum of w_u^2 per cell
};

CellWeights cell_weights(const Partition& x, const Partition& y, const WeightVector& w) {
    CellWeights cw;
    cw.rows = x.part_count();
    cw.cols = y.part_count();
    cw.sum.assign(cw.rows * cw.cols, 0.0);
    cw.sq_sum.assign(cw.rows * cw.cols, 0.0);
    for (std::size_t u = 0; u < x.node_count(); ++u) {
        const std::size_t k = x.part_of(u) * cw.cols + y.part_of(u);
        cw.sum[k] += w[u];
        cw.sq_sum[k] += w[u] * w[u];
    }
    return cw;
}

// W over all cells, all rows, all columns and the whole set.
struct GeneralizedPairSums {
    double cells = 0.0;
    double rows = 0.0;
    double cols = 0.0;
    double total = 0.0;
};

GeneralizedPairSums generalized_pair_sums(const Partition& x, const Partition& y,
                                          const WeightVector& w) {
    const CellWeights cw = cell_weights(x, y, w);
    GeneralizedPairSums s;
    for (std::size_t k = 0; k < cw.sum.size(); ++k)
        s.cells += pairs_from_sums(cw.sum[k], cw.sq_sum[k]);
    double total_w = 0.0;
    double total_sq = 0.0;
    for (std::size_t i = 0; i < cw.rows; ++i) {
        double row_w = 0.0;
        double row_sq = 0.0;
        for (std::size_t j = 0; j < cw.cols; ++j) {
            row_w += cw.sum[i * cw.cols + j];
            row_sq += cw.sq_sum[i * cw.cols + j];
        }
        s.rows += pairs_from_sums(row_w, row_sq);
        total_w += row_w;
        total_sq += row_sq;
    }
    for (std::size_t j = 0; j < cw.cols; ++j) {
        double col_w = 0.0;
        double col_sq = 0.0;
        for (std::size_t i = 0; i < cw.rows; ++i) {
            col_w += cw.sum[i * cw.cols + j];
            col_sq += cw.sq_sum[i * cw.cols + j];
        }
        s.cols += pairs_from_sums(col_w, col_sq);
    }
    s.total = pairs_from_sums(total_w, total_sq);
    return s;
}

double modified_rand_impl(const Partition& x, const Partition& y, const WeightVector& w) {
    const GeneralizedPairSums s = generalized_pair_sums(x, y, w);
    if (!(s.total > 0.0))
        throw MeasureError("degenerate weights: no weighted node pairs");
    return detail::rand_from_pair_sums(s.cells, s.rows, s.cols, s.total);
}

double modified_adjusted_rand_impl(const Partition& x, const Partition& y,
                                   const WeightVector& w) {
    const GeneralizedPairSums s = generalized_pair_sums(x, y, w);
    if (!(s.total > 0.0))
        throw MeasureError("degenerate weights: no weighted node pairs");
    const auto parts = detail::adjusted_rand_parts(s.cells, s.rows, s.cols, s.total);
    if (parts.denominator == 0.0)
        return same_grouping(x, y) ? 1.0 : 0.0;
    return parts.numerator / parts.denominator;
}

double modified_nmi_impl(const Partition& x, const Partition& y, const WeightVector& w) {
    const WeightedJointDistribution joint = weighted_joint(x, y, w);
    return detail::nmi_from_joint(joint.cells, joint.rows, joint.cols);
}

} // namespace

bool node_purity(std::size_t u, const Partition& x, const Partition& y) {
    const ContingencyTable t = contingency(x, y);
    const std::vector<std::size_t> best = majority_columns(t);
    return best[x.part_of(u)] == y.part_of(u);
}

double modified_purity(const Partition& x, const Partition& y, const WeightVector& w) {
    check_coverage(x, y, w);
    const ContingencyTable t = contingency(x, y);
    const std::vector<std::size_t> best = majority_columns(t);
    double score = 0.0;
    for (std::size_t u = 0; u < x.node_count(); ++u)
        if (best[x.part_of(u)] == y.part_of(u))
            score += w[u];
    return score / w.sum();
}

double modified_f_measure(const Partition& x, const Partition& y, const WeightVector& w) {
    return detail::harmonic_mean(modified_purity(x, y, w), modified_purity(y, x, w));
}

double pair_weight(std::span<const std::size_t> subset, const WeightVector& w) {
    double sum = 0.0;
    double sq_sum = 0.0;
    for (std::size_t u : subset) {
        sum += w[u];
        sq_sum += w[u] * w[u];
    }
    return pairs_from_sums(sum, sq_sum);
}

double modified_rand(const Partition& x, const Partition& y, const WeightVector& w) {
    check_coverage(x, y, w);
    return detail::swap_for_canonical(x, y) ? modified_rand_impl(y, x, w)
                                            : modified_rand_impl(x, y, w);
}

double modified_adjusted_rand(const Partition& x, const Partition& y, const WeightVector& w) {
    check_coverage(x, y, w);
    return detail::swap_for_canonical(x, y) ? modified_adjusted_rand_impl(y, x, w)
                                            : modified_adjusted_rand_impl(x, y, w);
}

WeightedJointDistribution weighted_joint(const Partition& x, const Partition& y,
                                         const WeightVector& w) {
    check_coverage(x, y, w);
    WeightedJointDistribution d;
    d.rows = x.part_count();
    d.cols = y.part_count();
    d.cells.assign(d.rows * d.cols, 0.0);
    for (std::size_t u = 0; u < x.node_count(); ++u)
        d.cells[x.part_of(u) * d.cols + y.part_of(u)] += w[u];
    for (double& c : d.cells)
        c /= w.sum();
    d.row_sums.assign(d.rows, 0.0);
    d.col_sums.assign(d.cols, 0.0);
    for (std::size_t i = 0; i < d.rows; ++i)
        for (std::size_t j = 0; j < d.cols; ++j) {
            d.row_sums[i] += d.at(i, j);
            d.col_sums[j] += d.at(i, j);
        }
    return d;
}

double modified_nmi(const Partition& x, const Partition& y, const WeightVector& w) {
    check_coverage(x, y, w);
    return detail::swap_for_canonical(x, y) ? modified_nmi_impl(y, x, w)
                                            : modified_nmi_impl(x, y, w);
}

} // namespace commeval
