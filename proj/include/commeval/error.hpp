#pragma once

#include <stdexcept>
#include <string>

namespace commeval {

// Malformed input text: edge lists, partition files, weight files, score
// tables. Messages carry the offending line number where one exists.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid inputs outside a measure's domain: edgeless-graph
// modularity, degenerate weight vectors, node-set mismatches.
class MeasureError : public std::runtime_error {
public:
    explicit MeasureError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace commeval
