#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "commeval/experiment.hpp"

namespace commeval {

enum class TTestMode { unpaired, paired };

struct RankGroup {
    std::size_t rank = 0;            // 1-based position of the first member
    std::vector<std::string> labels; // ordered by decreasing mean
};

struct MeasureRanking {
    std::string measure;
    std::vector<RankGroup> groups;
};

struct RankingReport {
    double alpha = 0.05;
    TTestMode mode = TTestMode::unpaired;
    std::vector<MeasureRanking> rankings;

    // One group per row, mirroring a ranking table.
    void write_text(std::ostream& out) const;
};

// Per measure: labels sorted by mean descending, pairwise t-tests with Holm
// correction at `alpha`, and labels merged into one group while the chain
// of adjacent comparisons stays non-significant. Needs >= 2 trials per cell.
RankingReport rank(const ScoreTable& scores, double alpha,
                   TTestMode mode = TTestMode::unpaired);

} // namespace commeval
