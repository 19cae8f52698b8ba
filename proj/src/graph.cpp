#include "commeval/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "commeval/error.hpp"
#include "commeval/format.hpp"
#include "commeval/partition.hpp"
#include "line_reader.hpp"

namespace commeval {

namespace {

std::uint64_t edge_key(std::size_t u, std::size_t v, std::size_t n) {
    auto [lo, hi] = std::minmax(u, v);
    return static_cast<std::uint64_t>(lo) * n + hi;
}

} // namespace

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)) {
    if (labels_.empty())
        throw std::invalid_argument("graph must contain at least one node");
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty())
            throw std::invalid_argument("empty node label");
        if (!index_.emplace(labels_[i], i).second)
            throw std::invalid_argument("duplicate node label: " + labels_[i]);
    }
    adj_.resize(labels_.size());
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u >= labels_.size() || e.v >= labels_.size())
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("self-loop on node " + labels_[e.u]);
        if (!std::isfinite(e.weight) || e.weight <= 0.0)
            throw std::invalid_argument("edge weight must be positive and finite");
        if (!seen.insert(edge_key(e.u, e.v, labels_.size())).second)
            throw std::invalid_argument("duplicate edge " + labels_[e.u] + " " + labels_[e.v]);
        adj_[e.u].push_back({e.v, e.weight});
        adj_[e.v].push_back({e.u, e.weight});
        ++edge_count_;
        total_weight_ += e.weight;
    }
    for (const auto& nbrs : adj_)
        max_degree_ = std::max(max_degree_, nbrs.size());
}

Graph Graph::from_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<Edge> edges;
    std::unordered_set<std::string> seen_edges;

    auto intern = [&](const std::string& label) {
        auto [it, fresh] = index.emplace(label, labels.size());
        if (fresh)
            labels.push_back(label);
        return it->second;
    };

    LineReader reader(in);
    std::vector<std::string> tokens;
    while (reader.next_data_line(tokens)) {
        const std::size_t lineno = reader.line_number();
        if (tokens.size() == 1) {
            intern(tokens[0]);
            continue;
        }
        if (tokens.size() > 3)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'u', 'u v' or 'u v w'");
        if (tokens[0] == tokens[1])
            throw ParseError("line " + std::to_string(lineno) + ": self-loop on node '" +
                             tokens[0] + "'");
        double weight = 1.0;
        if (tokens.size() == 3) {
            if (!parse_double(tokens[2], weight) || !std::isfinite(weight) || weight <= 0.0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": edge weight must be a positive number, got '" + tokens[2] +
                                 "'");
        }
        const std::size_t u = intern(tokens[0]);
        const std::size_t v = intern(tokens[1]);
        std::string key = u < v ? tokens[0] + '\t' + tokens[1] : tokens[1] + '\t' + tokens[0];
        if (!seen_edges.insert(std::move(key)).second)
            throw ParseError("line " + std::to_string(lineno) + ": duplicate edge '" +
                             tokens[0] + " " + tokens[1] + "'");
        edges.push_back({u, v, weight});
    }
    if (labels.empty())
        throw ParseError("empty edge list: a graph needs at least one node");
    return Graph(std::move(labels), edges);
}

Graph Graph::from_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return from_edge_list(in);
}

std::optional<std::size_t> Graph::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

double Graph::strength(std::size_t u) const {
    double s = 0.0;
    for (const Neighbor& nb : adj_[u])
        s += nb.weight;
    return s;
}

std::size_t internal_degree(const Graph& g, const Partition& p, std::size_t u) {
    if (p.node_count() != g.node_count())
        throw MeasureError("partition does not cover the graph's node set");
    const std::size_t part = p.part_of(u);
    std::size_t count = 0;
    for (const Neighbor& nb : g.neighbors(u))
        if (p.part_of(nb.to) == part)
            ++count;
    return count;
}

double internal_strength(const Graph& g, const Partition& p, std::size_t u) {
    if (p.node_count() != g.node_count())
        throw MeasureError("partition does not cover the graph's node set");
    const std::size_t part = p.part_of(u);
    double s = 0.0;
    for (const Neighbor& nb : g.neighbors(u))
        if (p.part_of(nb.to) == part)
            s += nb.weight;
    return s;
}

double modularity(const Graph& g, const Partition& p) {
    if (g.edge_count() == 0)
        throw MeasureError("modularity is undefined on an edgeless graph");
    if (p.node_count() != g.node_count())
        throw MeasureError("partition does not cover the graph's node set");

    const double total = g.total_weight();
    std::vector<double> intra(p.part_count(), 0.0);   // twice the internal weight
    std::vector<double> strength(p.part_count(), 0.0);
    for (std::size_t u = 0; u < g.node_count(); ++u) {
        const std::size_t c = p.part_of(u);
        for (const Neighbor& nb : g.neighbors(u)) {
            strength[c] += nb.weight;
            if (p.part_of(nb.to) == c)
                intra[c] += nb.weight;
        }
    }
    double q = 0.0;
    for (std::size_t c = 0; c < p.part_count(); ++c) {
        const double expected = strength[c] / (2.0 * total);
        q += intra[c] / (2.0 * total) - expected * expected;
    }
    return q;
}

} // namespace commeval
