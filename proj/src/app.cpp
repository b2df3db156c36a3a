#include "terratrack/app.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "terratrack/errors.hpp"
#include "terratrack/format.hpp"
#include "terratrack/presets.hpp"
#include "terratrack/report_io.hpp"

namespace terratrack::app {
namespace {

void require_sections(const RunConfig& config, const std::string& subcommand,
                      bool need_mission, bool need_sweep) {
    std::string missing;
    const auto need = [&missing](bool present, const char* name) {
        if (present) return;
        if (!missing.empty()) missing += ", ";
        missing += name;
    };
    need(config.terrain.has_value(), "[terrain]");
    need(config.chassis.has_value(), "[chassis]");
    need(config.state.has_value(), "[state]");
    if (need_mission) need(config.mission.has_value(), "[mission]");
    if (need_sweep) need(config.sweep.has_value(), "[sweep]");
    if (!missing.empty()) {
        throw ConfigError("subcommand '" + subcommand + "' needs sections: " + missing);
    }
}

// Writes `text` to the configured path when set, otherwise to `out`.
void deliver(const OutputOptions& output, std::ostream& out, const std::string& text) {
    if (output.path) {
        std::ofstream file(*output.path, std::ios::binary);
        if (!file) {
            throw ConfigError("cannot open output file '" + *output.path + "'");
        }
        file << text;
        return;
    }
    out << text;
}

void print_warnings(const TrackGeometry& geom, std::ostream& err) {
    for (const std::string& warning : geom.warnings()) {
        err << "warning: " << warning << '\n';
    }
}

RunConfig bundled_reference_config() {
    RunConfig config;
    config.terrain = presets::terrain("paper-soft-soil");
    config.terrain->kp_override = 1.7;
    config.chassis = presets::chassis("paper-chassis");
    VehicleOperatingState state;
    state.m = 300.0;
    state.v = 1.5;
    state.i = 0.2;
    state.theta_deg = 30.0;
    config.state = state;
    config.compaction_mode = CompactionMode::bekker_classic;
    return config;
}

// Preset-file records win over the built-in models of the same name.
ExtinguisherSpec resolve_extinguisher(const MissionConfig& mission) {
    if (mission.extinguisher_file) {
        for (const ExtinguisherSpec& ext : load_extinguishers(*mission.extinguisher_file)) {
            if (ext.model == mission.extinguisher) return ext;
        }
    }
    return presets::extinguisher(mission.extinguisher);
}

FeasibilityReport mission_feasibility(const RunConfig& config) {
    const MissionConfig& mission = *config.mission;
    const ExtinguisherSpec ext = resolve_extinguisher(mission);
    const FireTestSpec test = presets::fire_test(mission.fire_class);

    VehicleOperatingState slope_state = *config.state;
    slope_state.theta_deg = 30.0;
    const EvaluateOptions opts{config.compaction_mode, {}};
    const PerformanceReport slope_report =
        evaluate(*config.chassis, *config.terrain, slope_state, opts);

    FeasibilityReport feas;
    feas.checks.push_back(slope_climb_check(slope_report));
    feas.checks.push_back(discharge_budget_check(test, config.state->v, ext));
    for (CheckResult& check : reach_check(mission.robot_reach, mission.robot_max_height,
                                          presets::reach_requirements(), mission.fire_class)) {
        feas.checks.push_back(std::move(check));
    }
    feas.checks.push_back(temperature_check(ext));
    return feas;
}

int run_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    require_sections(config, "evaluate", false, false);
    print_warnings(*config.chassis, err);
    const EvaluateOptions opts{config.compaction_mode, {}};
    const PerformanceReport report =
        evaluate(*config.chassis, *config.terrain, *config.state, opts);

    std::string text;
    if (config.output.format == OutputFormat::csv) {
        text = performance_csv_header() + performance_csv_row(report);
    } else {
        text = render_text(report, config.output.verbose);
    }
    deliver(config.output, out, text);

    for (const CheckResult& check : report.checks) {
        if (check.status == CheckStatus::fail) return kExitFailedChecks;
    }
    return kExitOk;
}

int run_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
    require_sections(config, "check", true, false);
    print_warnings(*config.chassis, err);
    const FeasibilityReport feas = mission_feasibility(config);

    std::string text;
    if (config.output.format == OutputFormat::csv) {
        text = feasibility_csv_header();
        for (const CheckResult& check : feas.checks) text += feasibility_csv_row(check);
    } else {
        text = render_text(feas);
    }
    deliver(config.output, out, text);
    return feas.all_passed() ? kExitOk : kExitFailedChecks;
}

int run_sweep(const RunConfig& config, const CliOptions& options, std::ostream& out,
              std::ostream& err) {
    require_sections(config, "sweep", config.sweep && config.sweep->constraints.time_budget,
                     true);
    print_warnings(*config.chassis, err);

    SweepEnv env;
    env.soil = *config.terrain;
    env.base_geom = *config.chassis;
    env.base_state = *config.state;
    env.eval = EvaluateOptions{config.compaction_mode, {}};
    if (config.sweep->constraints.time_budget) {
        env.fire_test = presets::fire_test(config.mission->fire_class);
        env.extinguisher = resolve_extinguisher(*config.mission);
    }

    SweepOptions sweep_opts;
    sweep_opts.threads =
        options.threads != 0 ? options.threads
                             : std::max(1u, std::thread::hardware_concurrency());

    std::string text;
    SweepResult result;
    if (config.output.format == OutputFormat::csv) {
        text = sweep_csv_header();
        result = sweep(*config.sweep, env, sweep_opts,
                       [&text](const SweepRow& row) { text += sweep_csv_row(row); });
    } else {
        result = sweep(*config.sweep, env, sweep_opts);
        text = render_summary(result, config.sweep->objective);
    }
    deliver(config.output, out, text);
    if (config.output.format == OutputFormat::csv) {
        err << "feasible " << result.feasible_count << " of " << result.total << " points\n";
    }
    return result.best ? kExitOk : kExitFailedChecks;
}

int run_table3(const std::optional<RunConfig>& config, const CliOptions& options,
               std::ostream& out) {
    const ReferenceComparison cmp =
        reference_comparison(config, options.compaction_mode, options.kp_override);

    std::ostringstream text;
    text << "reference pipeline comparison (presets paper-soft-soil + paper-chassis)\n";
    text << "quantity        reference    computed     delta       tolerance  result\n";
    for (const ReferenceRow& row : cmp.rows) {
        const double delta_pct = (row.computed - row.reference) / row.reference * 100.0;
        text << "  " << row.name;
        for (std::size_t pad = row.name.size(); pad < 14; ++pad) text << ' ';
        std::string ref = format_sig(row.reference, 6);
        text << ref;
        for (std::size_t pad = ref.size(); pad < 13; ++pad) text << ' ';
        std::string comp = format_sig(row.computed, 6);
        text << comp;
        for (std::size_t pad = comp.size(); pad < 13; ++pad) text << ' ';
        std::string delta = format_sig(delta_pct, 4) + "%";
        text << delta;
        for (std::size_t pad = delta.size(); pad < 12; ++pad) text << ' ';
        std::string tol = format_sig(row.tolerance_rel * 100.0, 3) + "%";
        text << tol;
        for (std::size_t pad = tol.size(); pad < 11; ++pad) text << ' ';
        text << (row.pass ? "pass" : "FAIL") << '\n';
    }
    text << (cmp.all_passed() ? "all quantities within tolerance\n"
                              : "some quantities out of tolerance\n");
    text << '\n';
    text << "K_p check: the Rankine formula tan^2(pi/4 + phi/2) gives "
         << format_sig(cmp.kp_formula, 6)
         << ", but the reference lists K_p = 1.7, which matches the un-squared tangent ("
         << format_sig(std::sqrt(cmp.kp_formula), 6) << "). The comparison above used K_p = "
         << format_sig(cmp.kp_used, 6) << ".\n";
    out << text.str();
    return cmp.all_passed() ? kExitOk : kExitFailedChecks;
}

}  // namespace

bool ReferenceComparison::all_passed() const {
    for (const ReferenceRow& row : rows) {
        if (!row.pass) return false;
    }
    return true;
}

ReferenceComparison reference_comparison(const std::optional<RunConfig>& config,
                                         std::optional<CompactionMode> mode_override,
                                         std::optional<double> kp_override) {
    RunConfig run_config = config ? *config : bundled_reference_config();
    if (!run_config.terrain || !run_config.chassis || !run_config.state) {
        throw ConfigError("table3 config must provide [terrain], [chassis] and [state]");
    }
    if (kp_override) run_config.terrain->kp_override = *kp_override;
    const CompactionMode mode = mode_override.value_or(run_config.compaction_mode);

    const EvaluateOptions opts{mode, {}};
    const PerformanceReport report =
        evaluate(*run_config.chassis, *run_config.terrain, *run_config.state, opts);

    ReferenceComparison cmp;
    cmp.kp_formula = rankine_kp(run_config.terrain->phi_deg);
    cmp.kp_used = report.K_p;

    const auto add = [&cmp](const char* name, double reference, double computed,
                            double tolerance_rel) {
        const bool pass = std::abs(computed - reference) <= tolerance_rel * reference;
        cmp.rows.push_back({name, reference, computed, tolerance_rel, pass});
    };
    add("z_o [m]", 0.0024, report.z_o, 0.05);
    add("R_in [N]", 431.2, report.R_in, 0.005);
    add("R_b [N]", 15.6, report.R_b, 0.02);
    add("R_c [N]", 2.0, report.R_c, 0.10);
    add("R_g [N]", 1471.5, report.R_g, 0.005);
    add("F [N]", 3597.9, report.F, 0.005);
    add("a [m/s^2]", 5.6, report.a, 0.02);
    return cmp;
}

int run(const CliOptions& options, std::ostream& out, std::ostream& err) {
    try {
        std::optional<RunConfig> config;
        if (options.config_path) {
            config = load_config(*options.config_path);
        } else if (options.subcommand != "table3") {
            throw ConfigError("subcommand '" + options.subcommand + "' needs --config <path>");
        }

        if (config) {
            if (options.format) config->output.format = *options.format;
            if (options.output_path) config->output.path = options.output_path;
            if (options.verbose) config->output.verbose = true;
            if (options.compaction_mode) config->compaction_mode = *options.compaction_mode;
            if (options.kp_override && config->terrain) {
                config->terrain->kp_override = options.kp_override;
            }
            if (config->output.verbose) {
                err << "# effective configuration (defaults applied)\n"
                    << canonical_text(*config) << '\n';
            }
        }

        if (options.subcommand == "evaluate") {
            return run_evaluate(*config, out, err);
        }
        if (options.subcommand == "check") {
            return run_check(*config, out, err);
        }
        if (options.subcommand == "sweep") {
            return run_sweep(*config, options, out, err);
        }
        if (options.subcommand == "table3") {
            return run_table3(config, options, out);
        }
        throw ConfigError("unknown subcommand '" + options.subcommand + "'");
    } catch (const NumericsError& e) {
        err << "numerical error: " << e.what() << " (estimates " << e.previous_estimate
            << " and " << e.last_estimate << ")\n";
        return kExitNumericsError;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace terratrack::app
