#pragma once

// Small string helpers shared by the readers and writers. Not installed.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace corpfreq::detail {

std::string_view trim(std::string_view s) noexcept;
std::vector<std::string_view> split(std::string_view s, char sep);
// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string_view> lines(std::string_view s);

std::uint64_t parse_uint(std::string_view s, std::string_view what);
long long parse_int(std::string_view s, std::string_view what);
double parse_double(std::string_view s, std::string_view what);

// Shortest representation that parses back to the same double.
std::string format_shortest(double v);
std::string format_fixed(double v, int decimals);

std::string read_file(const std::filesystem::path& path);

}  // namespace corpfreq::detail
