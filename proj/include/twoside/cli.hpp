#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twoside/registry.hpp"

namespace twoside {

enum class Format { table, json, csv };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int check_failed = 1;
inline constexpr int usage = 2;
inline constexpr int io = 3;
} // namespace exit_code

/// Parsed command line. Defaults: --max-n 200, --seed 42, --format table.
struct RunConfig {
    std::string command;                 ///< list, check, converge, divisors, jordan, pick, prob, euclid
    std::vector<std::string> selectors;  ///< check: suite ids, "prefix.*" or "all"
    SuiteParams params;
    Format format = Format::table;
    std::optional<std::string> output;   ///< file path; stdout when unset

    // converge
    std::string generator;
    std::optional<std::string> tol;      ///< "p/q"
    std::optional<long> doublings;
    std::optional<long> steps;
    std::string eps = "1/1000000000000";
    std::optional<std::string> a;        ///< real_power base (2), geometric first term (1)
    std::optional<std::string> r;        ///< geometric ratio (1/2), circle/cylinder radius (1)
    std::string m = "1";                 ///< cylinder height
    long power = 2;

    // divisors
    long n = 10000;

    // jordan
    std::string region = "disk:1";
    std::string jordan_tol = "1/20";
    long max_grid = 4096;

    // pick
    long seeds = 200;
    long extent = 20;

    // prob
    std::string game;
    long coin_n = 1;
    std::optional<long> terms;           ///< dice 40, coin 60

    // euclid
    std::string euclid_suite = "ceva";
};

std::optional<Format> parse_format(const std::string& s);

/// Executes a validated config. Output is built in memory and written in one
/// go, so a given config always produces the same bytes.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv (TWOSIDE_FORMAT overrides --format) and runs.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace twoside
