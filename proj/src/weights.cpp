#include "commeval/weights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "commeval/error.hpp"
#include "commeval/format.hpp"
#include "line_reader.hpp"

namespace commeval {

std::string_view to_string(WeightScheme scheme) {
    switch (scheme) {
    case WeightScheme::uniform: return "uniform";
    case WeightScheme::normalized_degree: return "normalized_degree";
    case WeightScheme::embeddedness: return "embeddedness";
    case WeightScheme::degree_embeddedness: return "degree_embeddedness";
    case WeightScheme::normalized_strength: return "normalized_strength";
    case WeightScheme::strength_embeddedness: return "strength_embeddedness";
    }
    return "?";
}

std::optional<WeightScheme> parse_weight_scheme(std::string_view name) {
    for (WeightScheme s : {WeightScheme::uniform, WeightScheme::normalized_degree,
                           WeightScheme::embeddedness, WeightScheme::degree_embeddedness,
                           WeightScheme::normalized_strength,
                           WeightScheme::strength_embeddedness})
        if (name == to_string(s))
            return s;
    return std::nullopt;
}

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty())
        throw std::invalid_argument("weight vector must cover at least one node");
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0)
            throw MeasureError("weights must be finite and nonnegative");
        sum_ += w;
    }
    if (!(sum_ > 0.0))
        throw MeasureError("degenerate weights: total weight is zero");
}

double normalized_degree(const Graph& g, std::size_t u) {
    if (g.max_degree() == 0)
        throw MeasureError("normalized degree is undefined on an edgeless graph");
    return static_cast<double>(g.degree(u)) / static_cast<double>(g.max_degree());
}

double embeddedness(const Graph& g, const Partition& p, std::size_t u) {
    const std::size_t d = g.degree(u);
    if (d == 0)
        return 0.0;
    return static_cast<double>(internal_degree(g, p, u)) / static_cast<double>(d);
}

namespace {

double max_strength(const Graph& g) {
    double best = 0.0;
    for (std::size_t u = 0; u < g.node_count(); ++u)
        best = std::max(best, g.strength(u));
    return best;
}

double strength_embeddedness(const Graph& g, const Partition& p, std::size_t u) {
    const double s = g.strength(u);
    if (s == 0.0)
        return 0.0;
    return internal_strength(g, p, u) / s;
}

} // namespace

WeightVector compute_weights(const Graph& g, const Partition& reference, WeightScheme scheme) {
    const std::size_t n = g.node_count();
    std::vector<double> w(n);
    switch (scheme) {
    case WeightScheme::uniform:
        for (std::size_t u = 0; u < n; ++u)
            w[u] = 1.0;
        break;
    case WeightScheme::normalized_degree:
        for (std::size_t u = 0; u < n; ++u)
            w[u] = normalized_degree(g, u);
        break;
    case WeightScheme::embeddedness:
        for (std::size_t u = 0; u < n; ++u)
            w[u] = embeddedness(g, reference, u);
        break;
    case WeightScheme::degree_embeddedness:
        for (std::size_t u = 0; u < n; ++u)
            w[u] = normalized_degree(g, u) * embeddedness(g, reference, u);
        break;
    case WeightScheme::normalized_strength: {
        const double max_s = max_strength(g);
        if (!(max_s > 0.0))
            throw MeasureError("normalized strength is undefined on an edgeless graph");
        for (std::size_t u = 0; u < n; ++u)
            w[u] = g.strength(u) / max_s;
        break;
    }
    case WeightScheme::strength_embeddedness: {
        const double max_s = max_strength(g);
        if (!(max_s > 0.0))
            throw MeasureError("normalized strength is undefined on an edgeless graph");
        for (std::size_t u = 0; u < n; ++u)
            w[u] = (g.strength(u) / max_s) * strength_embeddedness(g, reference, u);
        break;
    }
    }
    return WeightVector(std::move(w));
}

WeightVector load_weights(std::istream& in, const Graph& g) {
    constexpr double kUnset = -1.0;
    std::vector<double> w(g.node_count(), kUnset);

    LineReader reader(in);
    std::vector<std::string> tokens;
    while (reader.next_data_line(tokens)) {
        const std::size_t lineno = reader.line_number();
        if (tokens.size() != 2)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'node_label weight'");
        const auto node = g.index_of(tokens[0]);
        if (!node)
            throw ParseError("line " + std::to_string(lineno) + ": unknown node '" + tokens[0] +
                             "'");
        double value = 0.0;
        if (!parse_double(tokens[1], value) || !std::isfinite(value) || value < 0.0)
            throw ParseError("line " + std::to_string(lineno) +
                             ": weight must be a finite nonnegative number, got '" + tokens[1] +
                             "'");
        if (w[*node] != kUnset)
            throw ParseError("line " + std::to_string(lineno) + ": duplicate weight for node '" +
                             tokens[0] + "'");
        w[*node] = value;
    }
    for (std::size_t u = 0; u < w.size(); ++u)
        if (w[u] == kUnset)
            throw ParseError("node '" + g.label(u) + "' is missing from the weight file");
    return WeightVector(std::move(w));
}

WeightVector load_weights_text(std::string_view text, const Graph& g) {
    std::istringstream in{std::string(text)};
    return load_weights(in, g);
}

} // namespace commeval
