#include "measure_common.hpp"

#include <algorithm>
#include <cmath>

namespace commeval::detail {

double nmi_from_joint(const std::vector<double>& cells, std::size_t rows, std::size_t cols) {
    std::vector<double> row_sums(rows, 0.0);
    std::vector<double> col_sums(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            row_sums[i] += cells[i * cols + j];
            col_sums[j] += cells[i * cols + j];
        }

    // Three-log form: on a diagonal joint the row/col logs cancel exactly,
    // leaving the entropy terms bitwise, so identical partitions score 1.
    double mi = 0.0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const double p = cells[i * cols + j];
            if (p > 0.0)
                mi += p * ((std::log(p) - std::log(row_sums[i])) - std::log(col_sums[j]));
        }

    double hx = 0.0;
    for (double r : row_sums)
        if (r > 0.0)
            hx -= r * std::log(r);
    double hy = 0.0;
    for (double c : col_sums)
        if (c > 0.0)
            hy -= c * std::log(c);

    if (hx + hy == 0.0)
        return 1.0;
    mi = std::max(mi, 0.0); // MI is nonnegative; clip rounding residue
    return 2.0 * mi / (hx + hy);
}

} // namespace commeval::detail
