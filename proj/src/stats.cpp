#include "commeval/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace commeval {

double mean(std::span<const double> xs) {
    if (xs.empty())
        throw std::invalid_argument("mean of an empty sample");
    double s = 0.0;
    for (double x : xs)
        s += x;
    return s / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2)
        return 0.0;
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs)
        s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

namespace {

// Modified Lentz continued fraction for the incomplete beta.
double beta_cf(double a, double b, double x) {
    constexpr int max_iter = 300;
    constexpr double eps = 1e-15;
    constexpr double fpmin = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < fpmin)
        d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin)
            d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < fpmin)
            d = fpmin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps)
            return h;
    }
    throw std::runtime_error("incomplete beta: continued fraction did not converge");
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("incomplete beta requires positive shape parameters");
    if (!(x >= 0.0) || !(x <= 1.0))
        throw std::invalid_argument("incomplete beta argument must lie in [0, 1]");
    if (x == 0.0)
        return 0.0;
    if (x == 1.0)
        return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double nu) {
    if (!(nu > 0.0))
        throw std::invalid_argument("degrees of freedom must be positive");
    const double x = nu / (nu + t * t);
    return std::clamp(regularized_incomplete_beta(0.5 * nu, 0.5, x), 0.0, 1.0);
}

double welch_p_value(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() < 2 || ys.size() < 2)
        throw std::invalid_argument("Welch test needs at least two observations per sample");
    const double m1 = mean(xs);
    const double m2 = mean(ys);
    const double v1 = sample_variance(xs);
    const double v2 = sample_variance(ys);
    if (v1 == 0.0 && v2 == 0.0)
        return m1 == m2 ? 1.0 : 0.0;
    const double n1 = static_cast<double>(xs.size());
    const double n2 = static_cast<double>(ys.size());
    const double se1 = v1 / n1;
    const double se2 = v2 / n2;
    const double t = (m1 - m2) / std::sqrt(se1 + se2);
    const double nu = (se1 + se2) * (se1 + se2) /
                      (se1 * se1 / (n1 - 1.0) + se2 * se2 / (n2 - 1.0));
    return student_t_two_sided_p(t, nu);
}

double paired_p_value(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size())
        throw std::invalid_argument("paired test needs samples of equal size");
    if (xs.size() < 2)
        throw std::invalid_argument("paired test needs at least two observations");
    std::vector<double> diff(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        diff[i] = xs[i] - ys[i];
    const double md = mean(diff);
    const double vd = sample_variance(diff);
    if (vd == 0.0)
        return md == 0.0 ? 1.0 : 0.0;
    const double n = static_cast<double>(diff.size());
    const double t = md / std::sqrt(vd / n);
    return student_t_two_sided_p(t, n - 1.0);
}

std::vector<double> holm_adjust(std::span<const double> p_values) {
    const std::size_t m = p_values.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return p_values[a] < p_values[b]; });
    std::vector<double> adjusted(m);
    double running = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double scaled = static_cast<double>(m - k) * p_values[order[k]];
        running = std::max(running, std::min(1.0, scaled));
        adjusted[order[k]] = running;
    }
    return adjusted;
}

} // namespace commeval
