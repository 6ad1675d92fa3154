#pragma once

// Internal line/field parsing helpers shared by the file-format readers.

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "dso/errors.hpp"

namespace dso::detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t begin = 0;
    while (true) {
        const std::size_t end = s.find(sep, begin);
        if (end == std::string_view::npos) {
            out.push_back(trim(s.substr(begin)));
            return out;
        }
        out.push_back(trim(s.substr(begin, end - begin)));
        begin = end + 1;
    }
}

inline double parse_double(std::string_view text, std::string_view where, int line) {
    const std::string buffer(text);
    char* end = nullptr;
    const double value = std::strtod(buffer.c_str(), &end);
    if (buffer.empty() || end != buffer.c_str() + buffer.size())
        throw ParseError(std::string(where) + ", line " + std::to_string(line) +
                         ": expected a number, got '" + buffer + "'");
    return value;
}

inline long parse_long(std::string_view text, std::string_view where, int line) {
    long value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(std::string(where) + ", line " + std::to_string(line) +
                         ": expected an integer, got '" + std::string(text) + "'");
    return value;
}

/// File-format identifiers: letters, digits, '_', '.', '-'.
inline bool valid_identifier(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
        if (!ok) return false;
    }
    return true;
}

} // namespace dso::detail
