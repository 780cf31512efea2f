#pragma once

#include <gjms6/report.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gjms6 {

/// Invalid parameters for a subcommand; the CLI maps it to exit code 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RunConfig {
    std::string subcommand;
    int n = 10;
    /// -1 picks the subcommand default (3 for spectrum, 8 for mountain).
    int ell_max = -1;
    double eps = 1e-3;
    double rho = 1.0;
    /// 0 picks the module default (GJMS6_QUAD_POINTS is honoured there).
    int quad_points = 0;
    std::uint64_t seed = 1;
    double tol = 1e-10;
    std::string format = "json";
    std::string output;

    // factorization
    std::string perturb = "0";
    int k = 0;
    // expand
    int max_order = 4;
    std::string k_map = "zero";
    // bubble
    bool scan = false;
    std::string sweep_csv;
    // mountain
    std::string f_spec = "const";
};

nlohmann::json config_json(const RunConfig& c);

Report cmd_spectrum(const RunConfig& c);
Report cmd_factorization(const RunConfig& c);
Report cmd_green(const RunConfig& c);
Report cmd_expand(const RunConfig& c);
Report cmd_bubble(const RunConfig& c);
Report cmd_mountain(const RunConfig& c);

/// Dispatches on c.subcommand and fills the report's config.
Report run_command(const RunConfig& c);

/// Parses "p/q" or an integer; throws UsageError.
Rational parse_rational(const std::string& s);

} // namespace gjms6
