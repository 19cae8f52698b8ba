#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace commeval {

// Shared scanner for the whitespace-separated text formats: strips CR,
// skips blank lines and lines whose first non-space character is '#',
// and reports 1-based line numbers.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next_data_line(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#')
                continue;
            tokens.clear();
            std::istringstream fields(line);
            std::string tok;
            while (fields >> tok)
                tokens.push_back(tok);
            return true;
        }
        return false;
    }

    std::size_t line_number() const { return lineno_; }

private:
    std::istream& in_;
    std::size_t lineno_ = 0;
};

} // namespace commeval
