#include "terratrack/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "terratrack/errors.hpp"
#include "terratrack/format.hpp"
#include "terratrack/presets.hpp"

namespace terratrack {
namespace {

enum class Dimension { none, length, mass, time, angle, pressure };

struct Suffix {
    Dimension dim;
    double factor;  // to canonical units (m, kg, s, deg, kPa)
};

const std::map<std::string, Suffix, std::less<>>& suffixes() {
    static const std::map<std::string, Suffix, std::less<>> table = {
        {"m", {Dimension::length, 1.0}},  {"mm", {Dimension::length, 1e-3}},
        {"kg", {Dimension::mass, 1.0}},   {"s", {Dimension::time, 1.0}},
        {"deg", {Dimension::angle, 1.0}}, {"kPa", {Dimension::pressure, 1.0}},
    };
    return table;
}

const char* dimension_name(Dimension dim) {
    switch (dim) {
        case Dimension::length: return "a length";
        case Dimension::mass: return "a mass";
        case Dimension::time: return "a time";
        case Dimension::angle: return "an angle";
        case Dimension::pressure: return "a pressure";
        default: return "a dimensionless value";
    }
}

[[noreturn]] void fail_line(int line, const std::string& msg) {
    throw ConfigError("line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

struct Entry {
    int line = 0;
    std::string key;
    std::string value;
};

struct Section {
    int line = 0;
    std::string name;
    std::vector<Entry> entries;
};

std::vector<Section> tokenize(const std::string& text) {
    std::vector<Section> sections;
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string_view line{raw};
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                fail_line(line_no, "malformed section header '" + std::string(line) + "'");
            }
            Section section;
            section.line = line_no;
            section.name = std::string(trim(line.substr(1, line.size() - 2)));
            sections.push_back(std::move(section));
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail_line(line_no, "expected 'key = value', got '" + std::string(line) + "'");
        }
        if (sections.empty()) {
            fail_line(line_no, "key outside of any [section]");
        }
        Entry entry;
        entry.line = line_no;
        entry.key = std::string(trim(line.substr(0, eq)));
        entry.value = std::string(trim(line.substr(eq + 1)));
        if (entry.key.empty()) fail_line(line_no, "empty key");
        if (entry.value.empty()) fail_line(line_no, "empty value for key '" + entry.key + "'");
        sections.back().entries.push_back(std::move(entry));
    }
    return sections;
}

struct NumberToken {
    double value = 0.0;   // without the suffix factor applied
    double factor = 1.0;  // from the suffix, 1.0 when absent
};

NumberToken parse_number_token(std::string_view raw, Dimension dim, int line,
                               const std::string& key, bool allow_suffix) {
    raw = trim(raw);
    NumberToken token;
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), token.value);
    if (ec != std::errc() || ptr == raw.data()) {
        fail_line(line, "bad number '" + std::string(raw) + "' for key '" + key + "'");
    }
    const std::string_view rest = trim(std::string_view(ptr, raw.data() + raw.size() - ptr));
    if (rest.empty()) return token;
    if (!allow_suffix) {
        fail_line(line, "unit suffix is only allowed once, at the end of the value of '" + key +
                            "'");
    }
    const auto it = suffixes().find(rest);
    if (it == suffixes().end()) {
        fail_line(line, "unknown unit suffix '" + std::string(rest) + "' for key '" + key + "'");
    }
    if (it->second.dim != dim) {
        fail_line(line, "unit '" + std::string(rest) + "' does not fit key '" + key +
                            "', which expects " + dimension_name(dim));
    }
    token.factor = it->second.factor;
    return token;
}

double parse_scalar(const Entry& entry, Dimension dim) {
    const NumberToken token = parse_number_token(entry.value, dim, entry.line, entry.key, true);
    return token.value * token.factor;
}

VarRange parse_range(const Entry& entry, Dimension dim) {
    std::vector<std::string_view> parts;
    std::string_view rest{entry.value};
    while (true) {
        const auto colon = rest.find(':');
        if (colon == std::string_view::npos) {
            parts.push_back(rest);
            break;
        }
        parts.push_back(rest.substr(0, colon));
        rest = rest.substr(colon + 1);
    }
    if (parts.size() == 1) {
        const double value = parse_scalar(entry, dim);
        return {value, value, 1.0};
    }
    if (parts.size() != 3) {
        fail_line(entry.line, "range for '" + entry.key + "' must be 'lo:hi:step'");
    }
    const NumberToken lo = parse_number_token(parts[0], dim, entry.line, entry.key, false);
    const NumberToken hi = parse_number_token(parts[1], dim, entry.line, entry.key, false);
    const NumberToken step = parse_number_token(parts[2], dim, entry.line, entry.key, true);
    return {lo.value * step.factor, hi.value * step.factor, step.value * step.factor};
}

bool parse_bool(const Entry& entry) {
    if (entry.value == "true") return true;
    if (entry.value == "false") return false;
    fail_line(entry.line, "key '" + entry.key + "' expects true or false, got '" + entry.value +
                              "'");
}

std::size_t parse_count(const Entry& entry) {
    std::size_t value = 0;
    const std::string_view raw = trim(std::string_view(entry.value));
    const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (ec != std::errc() || ptr != raw.data() + raw.size() || value == 0) {
        fail_line(entry.line,
                  "key '" + entry.key + "' expects a positive integer, got '" + entry.value + "'");
    }
    return value;
}

class SeenKeys {
  public:
    explicit SeenKeys(std::string section) : section_(std::move(section)) {}

    void mark(const Entry& entry) {
        if (!seen_.insert(entry.key).second) {
            fail_line(entry.line, "duplicate key '" + entry.key + "' in [" + section_ + "]");
        }
    }

    bool has(const std::string& key) const { return seen_.count(key) != 0; }

  private:
    std::string section_;
    std::set<std::string> seen_;
};

void require_keys(const Section& sec, const SeenKeys& seen, bool preset_used,
                  std::initializer_list<const char*> required) {
    if (preset_used) return;
    std::string missing;
    for (const char* key : required) {
        if (!seen.has(key)) {
            if (!missing.empty()) missing += ", ";
            missing += key;
        }
    }
    if (!missing.empty()) {
        fail_line(sec.line, "[" + sec.name + "] missing required key(s): " + missing);
    }
}

void check_preset_first(const Section& sec, const Entry& entry) {
    if (&entry != &sec.entries.front()) {
        fail_line(entry.line, "'preset' must be the first key in [" + sec.name + "]");
    }
}

template <typename Validatable>
void validate_section(const Section& sec, const Validatable& value) {
    try {
        value.validate();
    } catch (const std::domain_error& e) {
        fail_line(sec.line, "[" + sec.name + "] " + e.what());
    }
}

TerrainParams parse_terrain(const Section& sec) {
    TerrainParams soil;
    SeenKeys seen("terrain");
    bool preset_used = false;
    for (const Entry& entry : sec.entries) {
        seen.mark(entry);
        if (entry.key == "preset") {
            check_preset_first(sec, entry);
            try {
                soil = presets::terrain(entry.value);
            } catch (const ConfigError& e) {
                fail_line(entry.line, e.what());
            }
            preset_used = true;
        } else if (entry.key == "n") {
            soil.n = parse_scalar(entry, Dimension::none);
        } else if (entry.key == "k_c") {
            soil.k_c = parse_scalar(entry, Dimension::none);
        } else if (entry.key == "k_phi") {
            soil.k_phi = parse_scalar(entry, Dimension::none);
        } else if (entry.key == "c") {
            soil.c = parse_scalar(entry, Dimension::pressure);
        } else if (entry.key == "phi") {
            soil.phi_deg = parse_scalar(entry, Dimension::angle);
        } else if (entry.key == "gamma") {
            soil.gamma = parse_scalar(entry, Dimension::none);
        } else if (entry.key == "K") {
            soil.K = parse_scalar(entry, Dimension::length);
        } else if (entry.key == "mu_t") {
            soil.mu_t = parse_scalar(entry, Dimension::none);
        } else if (entry.key == "f_r") {
            soil.f_r = parse_scalar(entry, Dimension::none);
        } else if (entry.key == "kp_override") {
            soil.kp_override = parse_scalar(entry, Dimension::none);
        } else {
            fail_line(entry.line, "unknown key '" + entry.key + "' in [terrain]");
        }
    }
    require_keys(sec, seen, preset_used, {"n", "k_c", "k_phi", "c", "phi", "gamma", "K"});
    validate_section(sec, soil);
    return soil;
}

TrackGeometry parse_chassis(const Section& sec) {
    TrackGeometry geom;
    SeenKeys seen("chassis");
    bool preset_used = false;
    for (const Entry& entry : sec.entries) {
        seen.mark(entry);
        if (entry.key == "preset") {
            check_preset_first(sec, entry);
            try {
                geom = presets::chassis(entry.value);
            } catch (const ConfigError& e) {
                fail_line(entry.line, e.what());
            }
            preset_used = true;
        } else if (entry.key == "b") {
            geom.b = parse_scalar(entry, Dimension::length);
        } else if (entry.key == "l") {
            geom.l = parse_scalar(entry, Dimension::length);
        } else if (entry.key == "B") {
            geom.B = parse_scalar(entry, Dimension::length);
        } else if (entry.key == "P") {
            geom.P = parse_scalar(entry, Dimension::length);
        } else if (entry.key == "RD") {
            geom.RD = parse_scalar(entry, Dimension::length);
        } else if (entry.key == "RS") {
            geom.RS = parse_scalar(entry, Dimension::length);
        } else if (entry.key == "D") {
            geom.D = parse_scalar(entry, Dimension::length);
        } else if (entry.key == "delta") {
            geom.delta_pct = parse_scalar(entry, Dimension::none);
        } else {
            fail_line(entry.line, "unknown key '" + entry.key + "' in [chassis]");
        }
    }
    require_keys(sec, seen, preset_used, {"b", "l", "B", "P", "RD"});
    validate_section(sec, geom);
    return geom;
}

VehicleOperatingState parse_state(const Section& sec, CompactionMode& compaction_mode) {
    VehicleOperatingState state;
    SeenKeys seen("state");
    for (const Entry& entry : sec.entries) {
        seen.mark(entry);
        if (entry.key == "m") {
            state.m = parse_scalar(entry, Dimension::mass);
        } else if (entry.key == "v") {
            state.v = parse_scalar(entry, Dimension::none);
        } else if (entry.key == "i") {
            state.i = parse_scalar(entry, Dimension::none);
        } else if (entry.key == "theta") {
            state.theta_deg = parse_scalar(entry, Dimension::angle);
        } else if (entry.key == "g") {
            state.g = parse_scalar(entry, Dimension::none);
        } else if (entry.key == "compaction_mode") {
            if (entry.value == "bekker-classic") {
                compaction_mode = CompactionMode::bekker_classic;
            } else if (entry.value == "verbatim-eq8") {
                compaction_mode = CompactionMode::verbatim_eq8;
            } else {
                fail_line(entry.line, "compaction_mode must be bekker-classic or verbatim-eq8");
            }
        } else {
            fail_line(entry.line, "unknown key '" + entry.key + "' in [state]");
        }
    }
    require_keys(sec, seen, false, {"m", "v", "i"});
    validate_section(sec, state);
    return state;
}

MissionConfig parse_mission(const Section& sec) {
    MissionConfig mission;
    SeenKeys seen("mission");
    int extinguisher_line = sec.line;
    for (const Entry& entry : sec.entries) {
        seen.mark(entry);
        if (entry.key == "extinguisher") {
            mission.extinguisher = entry.value;
            extinguisher_line = entry.line;
        } else if (entry.key == "extinguisher_file") {
            mission.extinguisher_file = entry.value;
        } else if (entry.key == "fire_class") {
            if (entry.value == "A") {
                mission.fire_class = FireClass::A;
            } else if (entry.value == "B") {
                mission.fire_class = FireClass::B;
            } else {
                fail_line(entry.line, "fire_class must be A or B");
            }
        } else if (entry.key == "robot_reach") {
            mission.robot_reach = parse_scalar(entry, Dimension::length);
        } else if (entry.key == "robot_max_height") {
            mission.robot_max_height = parse_scalar(entry, Dimension::length);
        } else {
            fail_line(entry.line, "unknown key '" + entry.key + "' in [mission]");
        }
    }
    require_keys(sec, seen, false,
                 {"extinguisher", "fire_class", "robot_reach", "robot_max_height"});
    if (!mission.extinguisher_file) {
        // Models from a preset file resolve at use; built-ins fail fast here.
        try {
            presets::extinguisher(mission.extinguisher);
        } catch (const ConfigError& e) {
            fail_line(extinguisher_line, e.what());
        }
    }
    if (!(mission.robot_reach > 0.0)) {
        fail_line(sec.line, "[mission] robot_reach must be > 0");
    }
    if (!(mission.robot_max_height > 0.0)) {
        fail_line(sec.line, "[mission] robot_max_height must be > 0");
    }
    return mission;
}

DesignSpace parse_sweep(const Section& sec) {
    DesignSpace space;
    SeenKeys seen("sweep");
    for (const Entry& entry : sec.entries) {
        seen.mark(entry);
        if (entry.key == "objective") {
            if (entry.value == "max_acceleration") {
                space.objective = Objective::max_acceleration;
            } else if (entry.value == "max_drawbar_pull") {
                space.objective = Objective::max_drawbar_pull;
            } else {
                fail_line(entry.line,
                          "objective must be max_acceleration or max_drawbar_pull");
            }
        } else if (entry.key == "constraints") {
            std::string_view rest{entry.value};
            while (!rest.empty()) {
                const auto comma = rest.find(',');
                const std::string_view token = trim(rest.substr(0, comma));
                rest = comma == std::string_view::npos ? std::string_view{}
                                                       : rest.substr(comma + 1);
                if (token == "pitch") {
                    space.constraints.pitch_ratio = true;
                } else if (token == "steering") {
                    space.constraints.steering = true;
                } else if (token == "slope") {
                    space.constraints.slope_climb = true;
                } else if (token == "time") {
                    space.constraints.time_budget = true;
                } else {
                    fail_line(entry.line, "unknown constraint '" + std::string(token) +
                                              "' (expected pitch, steering, slope, time)");
                }
            }
        } else if (entry.key == "cap") {
            space.cap = parse_count(entry);
        } else if (entry.key == "refine") {
            const auto var = sweep_var_from_string(entry.value);
            if (!var) {
                fail_line(entry.line, "refine must name one of b, l, B, v, m, i");
            }
            space.refine = *var;
        } else if (const auto var = sweep_var_from_string(entry.key)) {
            Dimension dim = Dimension::none;
            if (*var == SweepVar::b || *var == SweepVar::l || *var == SweepVar::B) {
                dim = Dimension::length;
            } else if (*var == SweepVar::m) {
                dim = Dimension::mass;
            }
            space.ranges[static_cast<std::size_t>(*var)] = parse_range(entry, dim);
        } else {
            fail_line(entry.line, "unknown key '" + entry.key + "' in [sweep]");
        }
    }
    return space;
}

OutputOptions parse_output(const Section& sec) {
    OutputOptions output;
    SeenKeys seen("output");
    for (const Entry& entry : sec.entries) {
        seen.mark(entry);
        if (entry.key == "format") {
            if (entry.value == "text") {
                output.format = OutputFormat::text;
            } else if (entry.value == "csv") {
                output.format = OutputFormat::csv;
            } else {
                fail_line(entry.line, "format must be text or csv");
            }
        } else if (entry.key == "path") {
            output.path = entry.value;
        } else if (entry.key == "verbose") {
            output.verbose = parse_bool(entry);
        } else {
            fail_line(entry.line, "unknown key '" + entry.key + "' in [output]");
        }
    }
    return output;
}

void emit(std::string& out, const char* key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
}

void emit(std::string& out, const char* key, double value) {
    emit(out, key, format_full(value));
}

std::string range_text(const VarRange& range) {
    return format_full(range.lo) + ":" + format_full(range.hi) + ":" + format_full(range.step);
}

}  // namespace

const char* to_string(OutputFormat format) {
    return format == OutputFormat::text ? "text" : "csv";
}

RunConfig parse_config(const std::string& text) {
    const std::vector<Section> sections = tokenize(text);
    if (sections.empty()) {
        throw ConfigError(
            "config has no sections; an evaluation needs [terrain], [chassis] and [state] "
            "(plus [mission] for checks and [sweep] for sweeps)");
    }

    RunConfig config;
    std::set<std::string> seen_sections;
    for (const Section& sec : sections) {
        if (!seen_sections.insert(sec.name).second) {
            fail_line(sec.line, "duplicate section [" + sec.name + "]");
        }
        if (sec.name == "terrain") {
            config.terrain = parse_terrain(sec);
        } else if (sec.name == "chassis") {
            config.chassis = parse_chassis(sec);
        } else if (sec.name == "state") {
            config.state = parse_state(sec, config.compaction_mode);
        } else if (sec.name == "mission") {
            config.mission = parse_mission(sec);
        } else if (sec.name == "sweep") {
            config.sweep = parse_sweep(sec);
        } else if (sec.name == "output") {
            config.output = parse_output(sec);
        } else {
            fail_line(sec.line, "unknown section [" + sec.name + "]");
        }
    }
    return config;
}

RunConfig load_config(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_config(buffer.str());
}

std::vector<ExtinguisherSpec> parse_extinguishers(const std::string& text) {
    const std::vector<Section> sections = tokenize(text);
    if (sections.empty()) {
        throw ConfigError("extinguisher file has no records; expected one [MODEL] per record");
    }
    std::vector<ExtinguisherSpec> records;
    std::set<std::string> models;
    for (const Section& sec : sections) {
        if (!models.insert(sec.name).second) {
            fail_line(sec.line, "duplicate extinguisher record [" + sec.name + "]");
        }
        ExtinguisherSpec ext;
        ext.model = sec.name;
        SeenKeys seen(sec.name);
        for (const Entry& entry : sec.entries) {
            seen.mark(entry);
            if (entry.key == "type") {
                if (entry.value == "portable") {
                    ext.type = ExtinguisherType::portable;
                } else if (entry.value == "wheeled") {
                    ext.type = ExtinguisherType::wheeled;
                } else {
                    fail_line(entry.line, "type must be portable or wheeled");
                }
            } else if (entry.key == "power") {
                ext.power = entry.value;
            } else if (entry.key == "mass") {
                ext.mass_kg = parse_scalar(entry, Dimension::mass);
            } else if (entry.key == "diameter") {
                ext.body_diameter = parse_scalar(entry, Dimension::length);
            } else if (entry.key == "height") {
                ext.body_height = parse_scalar(entry, Dimension::length);
            } else if (entry.key == "hose") {
                ext.hose_length = parse_scalar(entry, Dimension::length);
            } else if (entry.key == "discharge") {
                ext.discharge_time = parse_scalar(entry, Dimension::time);
            } else if (entry.key == "temp_lo") {
                ext.operating_temp.lo = parse_scalar(entry, Dimension::none);
            } else if (entry.key == "temp_hi") {
                ext.operating_temp.hi = parse_scalar(entry, Dimension::none);
            } else {
                fail_line(entry.line,
                          "unknown key '" + entry.key + "' in [" + sec.name + "]");
            }
        }
        require_keys(sec, seen, false,
                     {"type", "power", "mass", "diameter", "height", "hose", "discharge",
                      "temp_lo", "temp_hi"});
        validate_section(sec, ext);
        records.push_back(std::move(ext));
    }
    return records;
}

std::vector<ExtinguisherSpec> load_extinguishers(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot open extinguisher file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_extinguishers(buffer.str());
}

std::string canonical_text(const RunConfig& config) {
    std::string out;

    if (config.terrain) {
        const TerrainParams& soil = *config.terrain;
        out += "[terrain]\n";
        emit(out, "n", soil.n);
        emit(out, "k_c", soil.k_c);
        emit(out, "k_phi", soil.k_phi);
        emit(out, "c", soil.c);
        emit(out, "phi", soil.phi_deg);
        emit(out, "gamma", soil.gamma);
        emit(out, "K", soil.K);
        if (soil.mu_t) emit(out, "mu_t", *soil.mu_t);
        if (soil.f_r) emit(out, "f_r", *soil.f_r);
        if (soil.kp_override) emit(out, "kp_override", *soil.kp_override);
        out += '\n';
    }
    if (config.chassis) {
        const TrackGeometry& geom = *config.chassis;
        out += "[chassis]\n";
        emit(out, "b", geom.b);
        emit(out, "l", geom.l);
        emit(out, "B", geom.B);
        emit(out, "P", geom.P);
        emit(out, "RD", geom.RD);
        emit(out, "RS", geom.RS);
        emit(out, "D", geom.D);
        emit(out, "delta", geom.delta_pct);
        out += '\n';
    }
    if (config.state) {
        const VehicleOperatingState& state = *config.state;
        out += "[state]\n";
        emit(out, "m", state.m);
        emit(out, "v", state.v);
        emit(out, "i", state.i);
        emit(out, "theta", state.theta_deg);
        emit(out, "g", state.g);
        emit(out, "compaction_mode", std::string(to_string(config.compaction_mode)));
        out += '\n';
    }
    if (config.mission) {
        const MissionConfig& mission = *config.mission;
        out += "[mission]\n";
        emit(out, "extinguisher", mission.extinguisher);
        if (mission.extinguisher_file) emit(out, "extinguisher_file", *mission.extinguisher_file);
        emit(out, "fire_class", std::string(to_string(mission.fire_class)));
        emit(out, "robot_reach", mission.robot_reach);
        emit(out, "robot_max_height", mission.robot_max_height);
        out += '\n';
    }
    if (config.sweep) {
        const DesignSpace& space = *config.sweep;
        out += "[sweep]\n";
        emit(out, "objective", std::string(to_string(space.objective)));
        std::string constraints;
        const auto add = [&constraints](bool on, const char* name) {
            if (!on) return;
            if (!constraints.empty()) constraints += ",";
            constraints += name;
        };
        add(space.constraints.pitch_ratio, "pitch");
        add(space.constraints.steering, "steering");
        add(space.constraints.slope_climb, "slope");
        add(space.constraints.time_budget, "time");
        if (!constraints.empty()) emit(out, "constraints", constraints);
        emit(out, "cap", std::to_string(space.cap));
        if (space.refine) emit(out, "refine", std::string(to_string(*space.refine)));
        for (std::size_t j = 0; j < kSweepVarCount; ++j) {
            if (space.ranges[j]) {
                emit(out, to_string(static_cast<SweepVar>(j)), range_text(*space.ranges[j]));
            }
        }
        out += '\n';
    }

    out += "[output]\n";
    emit(out, "format", std::string(to_string(config.output.format)));
    if (config.output.path) emit(out, "path", *config.output.path);
    emit(out, "verbose", std::string(config.output.verbose ? "true" : "false"));
    return out;
}

}  // namespace terratrack
