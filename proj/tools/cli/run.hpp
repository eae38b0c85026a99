#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgspec::cli {

enum class OutputFormat { csv, json };

struct RunConfig {
    std::string subcommand;
    std::string kind = "kagome";
    double c = 1.0;
    double d = 3.0;
    double ell = 1.0;
    double k_max = 40.0;
    double kappa_max = 0.0; ///< 0 selects 10/ell
    double resolution = 0.0;
    int grid_n = 2000;
    double K_energy = 1e6;
    std::string out; ///< empty writes to stdout
    OutputFormat format = OutputFormat::csv;
    unsigned seed = 0; ///< reserved
    unsigned threads = 0;
};

/// Parses argv, runs one subcommand and writes its artifact.
/// Returns 0 on success, 2 on invalid input, 1 on an internal consistency failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qgspec::cli
