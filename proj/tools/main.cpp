#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "terratrack/app.hpp"

namespace {

struct RawOptions {
    std::string config;
    std::string output;
    std::string format;
    std::string compaction_mode;
    double kp = 0.0;
    bool kp_set = false;
    bool verbose = false;
    unsigned threads = 0;
};

void add_common_options(CLI::App* sub, RawOptions& raw, bool config_required) {
    auto* config = sub->add_option("--config", raw.config, "run configuration file");
    if (config_required) config->required();
    sub->add_option("--output", raw.output, "write results to this file instead of stdout");
    sub->add_option("--format", raw.format, "output format")
        ->check(CLI::IsMember({"text", "csv"}));
    sub->add_option("--compaction-mode", raw.compaction_mode, "compaction resistance model")
        ->check(CLI::IsMember({"bekker-classic", "verbatim-eq8"}));
    sub->add_option("--kp", raw.kp, "override the passive earth coefficient")
        ->each([&raw](const std::string&) { raw.kp_set = true; });
    sub->add_flag("--verbose", raw.verbose, "echo inputs and defaults");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"tracked-chassis soft-soil performance and mission-feasibility toolkit"};
    cli.require_subcommand(1);

    RawOptions raw;
    add_common_options(cli.add_subcommand("evaluate", "run the performance pipeline"), raw,
                       true);
    add_common_options(
        cli.add_subcommand("table3", "compare the bundled reference scenario against the "
                                     "computed pipeline"),
        raw, false);
    add_common_options(cli.add_subcommand("check", "run the mission feasibility checks"), raw,
                       true);
    auto* sweep =
        cli.add_subcommand("sweep", "explore the chassis design space over a grid");
    add_common_options(sweep, raw, true);
    sweep->add_option("--threads", raw.threads, "worker threads (default: all cores)");

    CLI11_PARSE(cli, argc, argv);

    terratrack::app::CliOptions options;
    options.subcommand = cli.get_subcommands().front()->get_name();
    if (!raw.config.empty()) options.config_path = raw.config;
    if (!raw.output.empty()) options.output_path = raw.output;
    if (raw.format == "text") options.format = terratrack::OutputFormat::text;
    if (raw.format == "csv") options.format = terratrack::OutputFormat::csv;
    if (raw.compaction_mode == "bekker-classic") {
        options.compaction_mode = terratrack::CompactionMode::bekker_classic;
    } else if (raw.compaction_mode == "verbatim-eq8") {
        options.compaction_mode = terratrack::CompactionMode::verbatim_eq8;
    }
    if (raw.kp_set) options.kp_override = raw.kp;
    options.verbose = raw.verbose;
    options.threads = raw.threads;

    return terratrack::app::run(options, std::cout, std::cerr);
}
