#pragma once

#include <optional>
#include <string>

#include "terratrack/chassis.hpp"
#include "terratrack/mission.hpp"
#include "terratrack/resistance.hpp"
#include "terratrack/sweep.hpp"
#include "terratrack/terrain.hpp"

namespace terratrack {

enum class OutputFormat { text, csv };
const char* to_string(OutputFormat format);

struct OutputOptions {
    OutputFormat format = OutputFormat::text;
    std::optional<std::string> path;  // default: stdout
    bool verbose = false;
};

struct MissionConfig {
    std::string extinguisher;  // model name, resolved against the file then the built-ins
    std::optional<std::string> extinguisher_file;
    FireClass fire_class = FireClass::B;
    double robot_reach = 0.0;       // [m]
    double robot_max_height = 0.0;  // [m]
};

/// Parsed run configuration. Sections are optional at parse time; each
/// subcommand checks for the sections it needs.
struct RunConfig {
    std::optional<TerrainParams> terrain;
    std::optional<TrackGeometry> chassis;
    std::optional<VehicleOperatingState> state;
    CompactionMode compaction_mode = CompactionMode::bekker_classic;
    std::optional<MissionConfig> mission;
    std::optional<DesignSpace> sweep;
    OutputOptions output;
};

/// Parses the line-oriented `[section]` / `key = value` format.
///
/// `#` starts a comment, numeric values accept the unit suffixes m, mm, kg,
/// s, deg and kPa (converted to canonical units at parse time), and sweep
/// variables accept inclusive ranges written `lo:hi:step`. Unknown sections
/// and keys are rejected by name; all errors carry the offending line number.
RunConfig parse_config(const std::string& text);

/// parse_config over the contents of `path`.
RunConfig load_config(const std::string& path);

/// Parses an extinguisher preset file: one `[MODEL]` section per record with
/// keys `type` (portable|wheeled), `power`, `mass`, `diameter`, `height`,
/// `hose`, `discharge` and `temp_lo`/`temp_hi` in deg C. Records come back in
/// file order; models named like the built-ins replace them on lookup.
std::vector<ExtinguisherSpec> parse_extinguishers(const std::string& text);

/// parse_extinguishers over the contents of `path`.
std::vector<ExtinguisherSpec> load_extinguishers(const std::string& path);

/// Canonical rendering: fixed section and key order, canonical units, full
/// precision, presets expanded. parse -> print -> parse is idempotent.
std::string canonical_text(const RunConfig& config);

}  // namespace terratrack
