#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "commeval/planted.hpp"
#include "commeval/weights.hpp"

namespace commeval {

// Condition-label x measure x trial score grid.
struct ScoreTable {
    std::vector<std::string> labels;
    std::vector<std::string> measures;
    // samples[label_index][measure_index] -> per-trial scores
    std::vector<std::vector<std::vector<double>>> samples;

    const std::vector<double>& cell(std::size_t label, std::size_t measure) const {
        return samples[label][measure];
    }

    // Rectangular per measure, at least one trial per cell, unique names.
    void validate() const;

    // TSV: header "label\tmeasure\ttrial\tvalue", one observation per line,
    // LF endings, '.' decimal separator.
    void write_tsv(std::ostream& out) const;
    static ScoreTable read_tsv(std::istream& in);

    // JSON: array of {label, measure, trial, value} records.
    void write_json(std::ostream& out) const;
    static ScoreTable read_json(std::istream& in);
};

// Measure columns produced by run_experiment, in output order.
const std::vector<std::string>& experiment_measures();

// Per trial: a fresh planted graph (seed cfg.seed + trial), a high-weight
// and a low-weight perturbation of `move_count` nodes from the first
// community into the second, and every measure of experiment_measures()
// for both estimates against the planted reference.
ScoreTable run_experiment(const PlantedConfig& cfg, std::size_t trials,
                          std::size_t move_count, WeightScheme scheme);

} // namespace commeval
