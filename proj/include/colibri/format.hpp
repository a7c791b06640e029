#pragma once

// Locale-independent number formatting for every text output.

#include <charconv>
#include <string>
#include <system_error>

namespace colibri {

/// Fixed notation with `decimals` digits after the point.
inline std::string format_fixed(double x, int decimals = 3) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, decimals);
    if (ec != std::errc{}) return "nan";
    std::string s(buf, end);
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
    return s;
}

/// Shortest round-tripping representation, with ".0" appended to integers.
inline std::string format_shortest(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) return "nan";
    std::string s(buf, end);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    if (s == "-0.0") s = "0.0";
    return s;
}

}  // namespace colibri
