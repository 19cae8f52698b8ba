#pragma once

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace commeval {

class Graph;

// Total assignment of every node to exactly one community. Raw community
// ids are compacted to 0..k-1 in first-appearance order, so every internal
// index denotes a non-empty part.
class Partition {
public:
    explicit Partition(const std::vector<std::size_t>& raw_ids);

    // Trusted constructor: ids must already be dense in [0, part_count)
    // with every part non-empty.
    static Partition from_dense(std::vector<std::size_t> assignment, std::size_t part_count);

    // Parses "node_label community_label" lines over g's node set; '#'
    // starts a comment line. Community indices follow first appearance in
    // the file. Every node of g must be assigned exactly once.
    static Partition from_stream(std::istream& in, const Graph& g);
    static Partition from_text(std::string_view text, const Graph& g);

    std::size_t node_count() const { return assignment_.size(); }
    std::size_t part_count() const { return part_sizes_.size(); }
    std::size_t part_of(std::size_t u) const { return assignment_[u]; }
    std::size_t part_size(std::size_t i) const { return part_sizes_[i]; }
    const std::vector<std::size_t>& assignment() const { return assignment_; }
    const std::vector<std::size_t>& part_sizes() const { return part_sizes_; }

    bool operator==(const Partition& other) const = default;

private:
    Partition() = default;

    std::vector<std::size_t> assignment_;
    std::vector<std::size_t> part_sizes_;
};

// I x J matrix of intersection cardinalities n_ij with marginals.
struct ContingencyTable {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::size_t> counts;   // row-major n_ij
    std::vector<std::size_t> row_sums; // n_i+
    std::vector<std::size_t> col_sums; // n_+j
    std::size_t total = 0;

    std::size_t at(std::size_t i, std::size_t j) const { return counts[i * cols + j]; }

    bool operator==(const ContingencyTable& other) const = default;
};

ContingencyTable contingency(const Partition& x, const Partition& y);

// True when both partitions induce the same grouping of the node set,
// community labels aside.
bool same_grouping(const Partition& x, const Partition& y);

} // namespace commeval
