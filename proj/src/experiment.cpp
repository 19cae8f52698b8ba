#include "commeval/experiment.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "commeval/error.hpp"
#include "commeval/format.hpp"
#include "commeval/generalized.hpp"
#include "commeval/graph.hpp"
#include "commeval/perturb.hpp"
#include "commeval/traditional.hpp"

namespace commeval {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out;
}

struct RecordSink {
    std::vector<std::string> labels;
    std::vector<std::string> measures;
    // (label_idx, measure_idx) -> list of (trial, value)
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, double>>>
        cells;

    std::size_t intern(std::vector<std::string>& names, const std::string& name) {
        auto it = std::find(names.begin(), names.end(), name);
        if (it != names.end())
            return static_cast<std::size_t>(it - names.begin());
        names.push_back(name);
        return names.size() - 1;
    }

    void add(const std::string& label, const std::string& measure, std::size_t trial,
             double value) {
        const std::size_t l = intern(labels, label);
        const std::size_t m = intern(measures, measure);
        cells[{l, m}].push_back({trial, value});
    }

    ScoreTable finish() {
        ScoreTable table;
        table.labels = labels;
        table.measures = measures;
        table.samples.assign(labels.size(),
                             std::vector<std::vector<double>>(measures.size()));
        for (auto& [key, entries] : cells) {
            std::sort(entries.begin(), entries.end());
            std::vector<double>& dst = table.samples[key.first][key.second];
            dst.resize(entries.size());
            for (std::size_t i = 0; i < entries.size(); ++i) {
                if (entries[i].first != i)
                    throw ParseError("score table: trials of '" + labels[key.first] + "' / '" +
                                     measures[key.second] + "' are not contiguous from 0");
                dst[i] = entries[i].second;
            }
        }
        table.validate();
        return table;
    }
};

} // namespace

void ScoreTable::validate() const {
    if (labels.empty() || measures.empty())
        throw std::invalid_argument("score table needs at least one label and one measure");
    std::unordered_set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size())
        throw std::invalid_argument("score table labels must be unique");
    seen = std::unordered_set<std::string>(measures.begin(), measures.end());
    if (seen.size() != measures.size())
        throw std::invalid_argument("score table measures must be unique");
    if (samples.size() != labels.size())
        throw std::invalid_argument("score table row count does not match labels");
    for (const auto& row : samples)
        if (row.size() != measures.size())
            throw std::invalid_argument("score table column count does not match measures");
    for (std::size_t m = 0; m < measures.size(); ++m) {
        const std::size_t trials = samples[0][m].size();
        if (trials == 0)
            throw std::invalid_argument("score table cell without trials: " + measures[m]);
        for (std::size_t l = 1; l < labels.size(); ++l)
            if (samples[l][m].size() != trials)
                throw std::invalid_argument("score table is not rectangular for measure " +
                                            measures[m]);
    }
}

void ScoreTable::write_tsv(std::ostream& out) const {
    out << "label\tmeasure\ttrial\tvalue\n";
    for (std::size_t l = 0; l < labels.size(); ++l)
        for (std::size_t m = 0; m < measures.size(); ++m)
            for (std::size_t t = 0; t < samples[l][m].size(); ++t)
                out << labels[l] << '\t' << measures[m] << '\t' << t << '\t'
                    << format_double(samples[l][m][t]) << '\n';
}

ScoreTable ScoreTable::read_tsv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("score table: empty input");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line != "label\tmeasure\ttrial\tvalue")
        throw ParseError("score table: expected header 'label\\tmeasure\\ttrial\\tvalue'");

    RecordSink sink;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab - start));
            if (tab == std::string::npos)
                break;
            start = tab + 1;
        }
        if (fields.size() != 4)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 4 tab-separated fields");
        std::size_t trial = 0;
        try {
            trial = std::stoul(fields[2]);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad trial index '" +
                             fields[2] + "'");
        }
        double value = 0.0;
        if (!parse_double(fields[3], value))
            throw ParseError("line " + std::to_string(lineno) + ": bad value '" + fields[3] +
                             "'");
        sink.add(fields[0], fields[1], trial, value);
    }
    return sink.finish();
}

void ScoreTable::write_json(std::ostream& out) const {
    out << "[\n";
    bool first = true;
    for (std::size_t l = 0; l < labels.size(); ++l)
        for (std::size_t m = 0; m < measures.size(); ++m)
            for (std::size_t t = 0; t < samples[l][m].size(); ++t) {
                if (!first)
                    out << ",\n";
                first = false;
                out << "{\"label\":\"" << json_escape(labels[l]) << "\",\"measure\":\""
                    << json_escape(measures[m]) << "\",\"trial\":" << t
                    << ",\"value\":" << format_double_full(samples[l][m][t]) << "}";
            }
    out << "\n]\n";
}

ScoreTable ScoreTable::read_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("score table JSON: ") + e.what());
    }
    if (!doc.is_array())
        throw ParseError("score table JSON: expected an array of records");
    RecordSink sink;
    for (const auto& rec : doc) {
        if (!rec.is_object() || !rec.contains("label") || !rec.contains("measure") ||
            !rec.contains("trial") || !rec.contains("value") || !rec["label"].is_string() ||
            !rec["measure"].is_string() || !rec["trial"].is_number_unsigned() ||
            !rec["value"].is_number())
            throw ParseError("score table JSON: record needs string label/measure, "
                             "unsigned trial and numeric value");
        sink.add(rec["label"].get<std::string>(), rec["measure"].get<std::string>(),
                 rec["trial"].get<std::size_t>(), rec["value"].get<double>());
    }
    return sink.finish();
}

const std::vector<std::string>& experiment_measures() {
    static const std::vector<std::string> names = {
        "f_measure",          "rand_index",          "adjusted_rand",
        "nmi",                "f_measure_modified",  "rand_index_modified",
        "adjusted_rand_modified", "nmi_modified",    "modularity",
    };
    return names;
}

ScoreTable run_experiment(const PlantedConfig& cfg, std::size_t trials,
                          std::size_t move_count, WeightScheme scheme) {
    if (trials < 2)
        throw std::invalid_argument("experiment needs at least two trials");
    if (cfg.communities < 2)
        throw std::invalid_argument("experiment needs at least two communities");

    ScoreTable table;
    table.labels = {"high_weight", "low_weight"};
    table.measures = experiment_measures();
    table.samples.assign(table.labels.size(),
                         std::vector<std::vector<double>>(
                             table.measures.size(), std::vector<double>(trials)));

    for (std::size_t t = 0; t < trials; ++t) {
        PlantedConfig trial_cfg = cfg;
        trial_cfg.seed = cfg.seed + t;
        const auto [graph, ref] = generate_planted(trial_cfg);
        const WeightVector w = compute_weights(graph, ref, scheme);
        const Partition estimates[2] = {
            perturb(ref, graph, PerturbStrategy::highest_weight, move_count, w,
                    trial_cfg.seed, 0, 1),
            perturb(ref, graph, PerturbStrategy::lowest_weight, move_count, w,
                    trial_cfg.seed, 0, 1),
        };
        for (std::size_t l = 0; l < 2; ++l) {
            const Partition& est = estimates[l];
            const double values[9] = {
                f_measure(est, ref),
                rand_index(est, ref),
                adjusted_rand(est, ref),
                nmi(est, ref),
                modified_f_measure(est, ref, w),
                modified_rand(est, ref, w),
                modified_adjusted_rand(est, ref, w),
                modified_nmi(est, ref, w),
                modularity(graph, est),
            };
            for (std::size_t m = 0; m < 9; ++m)
                table.samples[l][m][t] = values[m];
        }
    }
    return table;
}

} // namespace commeval
