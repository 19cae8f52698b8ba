#include "commeval/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "commeval/error.hpp"
#include "commeval/stats.hpp"

namespace commeval {

RankingReport rank(const ScoreTable& scores, double alpha, TTestMode mode) {
    scores.validate();
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("significance level must lie in (0, 1)");

    const std::size_t k = scores.labels.size();
    RankingReport report;
    report.alpha = alpha;
    report.mode = mode;

    for (std::size_t m = 0; m < scores.measures.size(); ++m) {
        for (std::size_t l = 0; l < k; ++l)
            if (scores.cell(l, m).size() < 2)
                throw MeasureError("ranking needs at least two trials per cell");

        std::vector<double> means(k);
        for (std::size_t l = 0; l < k; ++l)
            means[l] = mean(scores.cell(l, m));

        std::vector<std::size_t> order(k);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return means[a] != means[b] ? means[a] > means[b] : a < b;
        });

        // All pairwise comparisons, Holm-adjusted together.
        std::vector<double> raw;
        raw.reserve(k * (k - 1) / 2);
        auto pair_index = [&](std::size_t a, std::size_t b) {
            if (a > b)
                std::swap(a, b);
            return a * k - a * (a + 1) / 2 + (b - a - 1);
        };
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                raw.push_back(mode == TTestMode::paired
                                  ? paired_p_value(scores.cell(a, m), scores.cell(b, m))
                                  : welch_p_value(scores.cell(a, m), scores.cell(b, m)));
        const std::vector<double> adjusted = holm_adjust(raw);

        MeasureRanking ranking;
        ranking.measure = scores.measures[m];
        for (std::size_t pos = 0; pos < k; ++pos) {
            const bool start_group =
                pos == 0 || adjusted[pair_index(order[pos - 1], order[pos])] < alpha;
            if (start_group)
                ranking.groups.push_back({pos + 1, {}});
            ranking.groups.back().labels.push_back(scores.labels[order[pos]]);
        }
        report.rankings.push_back(std::move(ranking));
    }
    return report;
}

void RankingReport::write_text(std::ostream& out) const {
    for (const MeasureRanking& ranking : rankings) {
        out << "# measure\t" << ranking.measure << '\n';
        for (const RankGroup& group : ranking.groups) {
            out << group.rank << '\t';
            for (std::size_t i = 0; i < group.labels.size(); ++i) {
                if (i > 0)
                    out << ", ";
                out << group.labels[i];
            }
            out << '\n';
        }
    }
}

} // namespace commeval
