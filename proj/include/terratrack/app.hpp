#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "terratrack/config.hpp"

namespace terratrack::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedChecks = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNumericsError = 3;

struct CliOptions {
    std::string subcommand;  // evaluate | table3 | check | sweep
    std::optional<std::string> config_path;
    std::optional<std::string> output_path;
    std::optional<OutputFormat> format;
    std::optional<CompactionMode> compaction_mode;
    std::optional<double> kp_override;
    bool verbose = false;
    unsigned threads = 0;  // sweep only; 0 means hardware concurrency
};

/// One row of the bundled-scenario comparison run by the `table3` subcommand.
struct ReferenceRow {
    std::string name;
    double reference = 0.0;
    double computed = 0.0;
    double tolerance_rel = 0.0;  // relative, e.g. 0.005 for 0.5 %
    bool pass = false;
};

struct ReferenceComparison {
    std::vector<ReferenceRow> rows;
    double kp_formula = 0.0;  // Rankine value at the scenario's phi
    double kp_used = 0.0;     // coefficient the pipeline actually used
    bool all_passed() const;
};

/// Runs the bundled reference scenario (soft-soil + chassis presets,
/// m = 300 kg, v = 1.5 m/s, i = 0.2, theta = 30 deg, K_p override 1.7,
/// classic compaction) and compares each output against its reference value
/// at the pinned tolerance.
ReferenceComparison reference_comparison(
    const std::optional<RunConfig>& config = std::nullopt,
    std::optional<CompactionMode> mode_override = std::nullopt,
    std::optional<double> kp_override = std::nullopt);

/// Dispatches a subcommand. Writes results to `out` (or the configured file),
/// diagnostics to `err`, and returns the exit status: 0 ok, 1 failed checks /
/// infeasible, 2 input error, 3 numerical error.
int run(const CliOptions& options, std::ostream& out, std::ostream& err);

}  // namespace terratrack::app
