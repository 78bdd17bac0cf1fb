#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace benford::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;
inline constexpr int kExitGuard = 3;

/// Runs the `benford` command line; args excludes the program name.
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest round-trip-safe text at 12 significant digits, independent of
/// the locale.
std::string format_double(double v);

/// "7", "1..50", "10,50,100" or mixtures such as "1..5,10". Throws
/// ConfigError.
std::vector<std::int64_t> parse_int_list(std::string_view text);
std::vector<double> parse_double_list(std::string_view text);

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view data);

}  // namespace benford::cli
