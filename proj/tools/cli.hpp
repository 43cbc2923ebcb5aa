#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace diffcolor::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_validation = 2;
inline constexpr int exit_oracle_limit = 3;

/// Parsed command line.
struct RunConfig {
    std::string command;
    std::optional<std::string> in_path;
    std::optional<std::string> out_path;
    std::optional<std::string> labels_path;
    std::string family;  ///< inline generator, exclusive with in_path
    std::string scheme = "auto";
    std::string format = "json";
    std::optional<std::uint64_t> seed;
    int threads = 1;
    int limit_n = 16;
    int timeout_ms = 0;
    std::optional<int> spine;
    std::optional<int> legs;
    std::optional<int> k;
    std::optional<int> delta;
    std::vector<int> leg_list;
    std::vector<int> paths;
};

/// Runs one `diffcolor` invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diffcolor::cli
