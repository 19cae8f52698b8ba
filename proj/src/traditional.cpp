#include "commeval/traditional.hpp"

#include <algorithm>

#include "commeval/error.hpp"
#include "measure_common.hpp"

namespace commeval {

namespace {

std::uint64_t choose2(std::uint64_t k) {
    return k * (k - 1) / 2;
}

struct PairSums {
    std::uint64_t cells = 0; // sum of C(n_ij, 2)
    std::uint64_t rows = 0;  // sum of C(n_i+, 2)
    std::uint64_t cols = 0;  // sum of C(n_+j, 2)
    std::uint64_t total = 0; // C(n, 2)
};

PairSums pair_sums(const ContingencyTable& t) {
    if (t.total < 2)
        throw MeasureError("pair-based measures need at least two nodes");
    PairSums s;
    for (std::size_t c : t.counts)
        s.cells += choose2(c);
    for (std::size_t r : t.row_sums)
        s.rows += choose2(r);
    for (std::size_t c : t.col_sums)
        s.cols += choose2(c);
    s.total = choose2(t.total);
    return s;
}

double nmi_impl(const Partition& x, const Partition& y) {
    const ContingencyTable t = contingency(x, y);
    std::vector<double> joint(t.counts.size());
    const double n = static_cast<double>(t.total);
    for (std::size_t k = 0; k < t.counts.size(); ++k)
        joint[k] = static_cast<double>(t.counts[k]) / n;
    return detail::nmi_from_joint(joint, t.rows, t.cols);
}

} // namespace

double purity(const Partition& x, const Partition& y) {
    const ContingencyTable t = contingency(x, y);
    std::uint64_t hits = 0;
    for (std::size_t i = 0; i < t.rows; ++i) {
        std::size_t best = 0;
        for (std::size_t j = 0; j < t.cols; ++j)
            best = std::max(best, t.at(i, j));
        hits += best;
    }
    return static_cast<double>(hits) / static_cast<double>(t.total);
}

double f_measure(const Partition& x, const Partition& y) {
    return detail::harmonic_mean(purity(x, y), purity(y, x));
}

PairCounts pair_counts(const Partition& x, const Partition& y) {
    const PairSums s = pair_sums(contingency(x, y));
    PairCounts pc;
    pc.together_both = s.cells;
    pc.together_x_only = s.rows - s.cells;
    pc.together_y_only = s.cols - s.cells;
    pc.apart_both = s.total + s.cells - s.rows - s.cols;
    return pc;
}

double rand_index(const Partition& x, const Partition& y) {
    const PairSums s = pair_sums(contingency(x, y));
    const std::uint64_t agree = s.total + 2 * s.cells - s.rows - s.cols; // a + d
    return static_cast<double>(agree) / static_cast<double>(s.total);
}

double adjusted_rand(const Partition& x, const Partition& y) {
    const PairSums s = pair_sums(contingency(x, y));
    const auto parts = detail::adjusted_rand_parts(
        static_cast<double>(s.cells), static_cast<double>(s.rows),
        static_cast<double>(s.cols), static_cast<double>(s.total));
    if (parts.denominator == 0.0)
        return same_grouping(x, y) ? 1.0 : 0.0;
    return parts.numerator / parts.denominator;
}

double nmi(const Partition& x, const Partition& y) {
    return detail::swap_for_canonical(x, y) ? nmi_impl(y, x) : nmi_impl(x, y);
}

} // namespace commeval
