#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "commeval/graph.hpp"
#include "commeval/partition.hpp"

namespace commeval {

enum class WeightScheme {
    uniform,
    normalized_degree,
    embeddedness,
    degree_embeddedness,
    normalized_strength,
    strength_embeddedness,
};

std::string_view to_string(WeightScheme scheme);
std::optional<WeightScheme> parse_weight_scheme(std::string_view name);

// Nonnegative per-node importance weights with their precomputed total.
// Invariant: every weight finite and >= 0, total > 0.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> weights);

    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t u) const { return weights_[u]; }
    double sum() const { return sum_; }
    const std::vector<double>& values() const { return weights_; }

private:
    std::vector<double> weights_;
    double sum_ = 0.0;
};

// d(u) divided by the maximal degree observed in the network.
double normalized_degree(const Graph& g, std::size_t u);

// Fraction of u's neighbors inside u's own community; 0 for isolated nodes.
double embeddedness(const Graph& g, const Partition& p, std::size_t u);

// Builds the per-node weights of the requested scheme. Embeddedness-based
// schemes are anchored on `reference`; degree/strength-based schemes need
// at least one edge. Rejects vectors whose total weight is zero.
WeightVector compute_weights(const Graph& g, const Partition& reference, WeightScheme scheme);

// Custom weight file: "node_label weight" lines, '#' comments; every node
// of g must appear exactly once with a finite nonnegative weight.
WeightVector load_weights(std::istream& in, const Graph& g);
WeightVector load_weights_text(std::string_view text, const Graph& g);

} // namespace commeval
