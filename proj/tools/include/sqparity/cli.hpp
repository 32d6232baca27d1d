// The sqparity command-line front end, as a library so tests can drive it.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sqparity::cli {

enum class OutputFormat { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::string subcommand;
    OutputFormat format = OutputFormat::csv;
    std::string output_path;  // empty: standard output
    bool quiet = false;       // suppress progress on the diagnostic stream

    std::uint64_t max_n = 0;
    std::int64_t b_max = 0;
    std::int64_t a = 0;
    std::int64_t b = 1;
    bool per_denominator = false;

    std::uint64_t beta = 0;
    std::uint64_t L = 0;
    std::uint64_t l = 0;
    std::uint64_t trials = 0;  // divisor-bound: randomized mode when > 0
    std::uint64_t seed = 1;

    std::vector<std::int64_t> moduli;  // wright-verify denominators
    std::vector<double> taus;          // wright-verify tau' values
    std::vector<double> radii;         // g-factor-check |q|
    std::vector<double> phases;        // g-factor-check arg q
    std::vector<double> ys;            // small-tau
    double x = 0.0;
    std::vector<std::uint64_t> grid;   // asympt
};

/// Executes one parsed configuration. Data goes to `out` (or output_path),
/// progress and diagnostics to `err`. Returns 0, 1 (a check failed) or
/// 2 (parameters outside an operation's domain).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sqparity::cli
