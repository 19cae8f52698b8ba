#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace commeval {

class Partition;

struct Neighbor {
    std::size_t to;
    double weight;
};

struct Edge {
    std::size_t u;
    std::size_t v;
    double weight = 1.0;
};

// Immutable undirected simple graph. Node labels are opaque strings mapped
// to dense indices in first-appearance order; edge weights default to 1.
class Graph {
public:
    Graph(std::vector<std::string> labels, const std::vector<Edge>& edges);

    // Parses edge-list text: "u v" or "u v w" per line, '#' starts a comment
    // line, a bare "u" declares an isolated node. Rejects self-loops,
    // duplicate edges and non-positive weights, naming the offending line.
    static Graph from_edge_list(std::istream& in);
    static Graph from_edge_list_text(std::string_view text);

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    double total_weight() const { return total_weight_; }

    const std::string& label(std::size_t u) const { return labels_[u]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    const std::vector<Neighbor>& neighbors(std::size_t u) const { return adj_[u]; }
    std::size_t degree(std::size_t u) const { return adj_[u].size(); }
    double strength(std::size_t u) const;
    std::size_t max_degree() const { return max_degree_; }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Neighbor>> adj_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t edge_count_ = 0;
    double total_weight_ = 0.0;
    std::size_t max_degree_ = 0;
};

// Number of u's neighbors sharing u's community in p.
std::size_t internal_degree(const Graph& g, const Partition& p, std::size_t u);

// Sum of weights of u's edges whose other endpoint shares u's community.
double internal_strength(const Graph& g, const Partition& p, std::size_t u);

// Newman-Girvan modularity Q = sum_c [l_c/m - (d_c/2m)^2]; strength and
// total-weight analogues on weighted graphs. Undefined on edgeless graphs.
double modularity(const Graph& g, const Partition& p);

} // namespace commeval
