#ifndef TRIAD_TEXT_HPP
#define TRIAD_TEXT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace triad {

/// Shortest round-trip decimal form of x, locale independent.
std::string format_double(double x);

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

/// Strict parsers; throw std::invalid_argument naming the offending text.
double parse_double(std::string_view s);
long long parse_int(std::string_view s);
bool parse_bool(std::string_view s);

/// FNV-1a 64-bit hash, used to fingerprint configurations.
std::uint64_t fnv1a64(std::string_view s);

std::string to_hex(std::uint64_t v);

}  // namespace triad

#endif  // TRIAD_TEXT_HPP
