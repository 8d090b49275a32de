#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "traderank/analysis.hpp"

namespace traderank::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kNumericalError = 3,
};

struct RunConfig {
    std::string command;  // rank, spectrum, spindle, velocity, correlator, summary, rmwtn
    std::vector<std::string> inputs;
    std::vector<std::string> mirror_inputs;  // import-side records used to fill export-side gaps
    std::optional<std::pair<int, int>> years;  // inclusive range
    std::string commodity = "TOTAL";
    double alpha = 0.5;
    double tol = 1e-12;
    int max_iter = 1000;
    std::string out_dir = ".";
    std::string format = "csv";  // csv | json
    std::uint64_t seed = 1;
    std::size_t realizations = 100;
    std::string variant = "pair";
    std::size_t n = 227;
    std::optional<std::pair<std::size_t, std::size_t>> fit_range;
    double cell_width = 3.0;
    double cell_height = 3.0;
    bool rescale = false;
    std::size_t top = 20;
    double gap = 0.02;
    std::vector<Band> bands{{1, 40}, {41, 80}, {81, 120}};
    int window = 5;
};

/// Validates the parts of a config that do not depend on input files.
/// Throws InputError.
void validate(const RunConfig& cfg);

/// Runs one command, writing its outputs and a `<command>_meta.json` sidecar
/// into cfg.out_dir. Diagnostics and timings go to `log`. Returns an ExitCode.
int run(const RunConfig& cfg, std::ostream& log);

/// Parses argv and dispatches to run().
int main(int argc, char** argv, std::ostream& log);

/// Parse helpers shared with tests: "2008" or "1962-2009", "1:100", "3x3", "1:40,41:80".
std::pair<int, int> parse_year_range(const std::string& text);
std::pair<std::size_t, std::size_t> parse_fit_range(const std::string& text);
std::pair<double, double> parse_cell(const std::string& text);
std::vector<Band> parse_bands(const std::string& text);

}  // namespace traderank::cli
