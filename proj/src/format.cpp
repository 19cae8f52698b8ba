#include "commeval/format.hpp"

#include <array>
#include <charconv>
#include <system_error>

namespace commeval {

std::string format_double(double v) {
    std::array<char, 32> buf;
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string format_double_full(double v) {
    std::array<char, 40> buf;
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                             std::chars_format::scientific, 16);
    return std::string(buf.data(), res.ptr);
}

bool parse_double(std::string_view token, double& out) {
    if (token.empty())
        return false;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc{} && res.ptr == last;
}

} // namespace commeval
