#pragma once

#include <string>

namespace commeval {

// Shortest round-trip decimal form, locale-independent.
std::string format_double(double v);

// Fixed 17-significant-digit scientific form for JSON numeric output.
std::string format_double_full(double v);

// Parses a full token as a double; rejects trailing garbage and empty input.
bool parse_double(std::string_view token, double& out);

} // namespace commeval
