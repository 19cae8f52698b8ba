#include "commeval/partition.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "commeval/error.hpp"
#include "commeval/graph.hpp"
#include "line_reader.hpp"

namespace commeval {

Partition::Partition(const std::vector<std::size_t>& raw_ids) {
    if (raw_ids.empty())
        throw std::invalid_argument("partition must cover at least one node");
    assignment_.resize(raw_ids.size());
    std::unordered_map<std::size_t, std::size_t> compact;
    for (std::size_t u = 0; u < raw_ids.size(); ++u) {
        auto [it, fresh] = compact.emplace(raw_ids[u], compact.size());
        if (fresh)
            part_sizes_.push_back(0);
        assignment_[u] = it->second;
        ++part_sizes_[it->second];
    }
}

Partition Partition::from_dense(std::vector<std::size_t> assignment, std::size_t part_count) {
    if (assignment.empty())
        throw std::invalid_argument("partition must cover at least one node");
    Partition p;
    p.part_sizes_.assign(part_count, 0);
    for (std::size_t id : assignment) {
        if (id >= part_count)
            throw std::invalid_argument("community index out of range");
        ++p.part_sizes_[id];
    }
    for (std::size_t size : p.part_sizes_)
        if (size == 0)
            throw std::invalid_argument("empty community in dense partition");
    p.assignment_ = std::move(assignment);
    return p;
}

Partition Partition::from_stream(std::istream& in, const Graph& g) {
    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
    std::vector<std::size_t> assignment(g.node_count(), kUnassigned);
    std::unordered_map<std::string, std::size_t> communities; // file appearance order

    LineReader reader(in);
    std::vector<std::string> tokens;
    while (reader.next_data_line(tokens)) {
        const std::size_t lineno = reader.line_number();
        if (tokens.size() != 2)
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'node_label community_label'");
        const auto node = g.index_of(tokens[0]);
        if (!node)
            throw ParseError("line " + std::to_string(lineno) + ": unknown node '" + tokens[0] +
                             "'");
        if (assignment[*node] != kUnassigned)
            throw ParseError("line " + std::to_string(lineno) +
                             ": duplicate assignment for node '" + tokens[0] + "'");
        auto [it, fresh] = communities.emplace(tokens[1], communities.size());
        (void)fresh;
        assignment[*node] = it->second;
    }
    for (std::size_t u = 0; u < assignment.size(); ++u)
        if (assignment[u] == kUnassigned)
            throw ParseError("node '" + g.label(u) + "' is not assigned to any community");
    return from_dense(std::move(assignment), communities.size());
}

Partition Partition::from_text(std::string_view text, const Graph& g) {
    std::istringstream in{std::string(text)};
    return from_stream(in, g);
}

ContingencyTable contingency(const Partition& x, const Partition& y) {
    if (x.node_count() != y.node_count())
        throw MeasureError("partitions cover different node sets");
    ContingencyTable t;
    t.rows = x.part_count();
    t.cols = y.part_count();
    t.counts.assign(t.rows * t.cols, 0);
    for (std::size_t u = 0; u < x.node_count(); ++u)
        ++t.counts[x.part_of(u) * t.cols + y.part_of(u)];
    t.row_sums.assign(t.rows, 0);
    t.col_sums.assign(t.cols, 0);
    for (std::size_t i = 0; i < t.rows; ++i)
        for (std::size_t j = 0; j < t.cols; ++j) {
            t.row_sums[i] += t.at(i, j);
            t.col_sums[j] += t.at(i, j);
        }
    t.total = x.node_count();
    return t;
}

bool same_grouping(const Partition& x, const Partition& y) {
    if (x.node_count() != y.node_count() || x.part_count() != y.part_count())
        return false;
    constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);
    std::vector<std::size_t> map(x.part_count(), kUnmapped);
    for (std::size_t u = 0; u < x.node_count(); ++u) {
        std::size_t& image = map[x.part_of(u)];
        if (image == kUnmapped)
            image = y.part_of(u);
        else if (image != y.part_of(u))
            return false;
    }
    return true;
}

} // namespace commeval
