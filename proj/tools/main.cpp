#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "draughts/config.hpp"
#include "draughts/runner.hpp"

namespace {

struct CliArgs {
    std::string config_path;
    std::string out_dir;
    uint64_t seed = 0;
    int jobs = 0;
    bool emit_ppm = false;
    CLI::App* seed_opt_owner = nullptr;
};

void add_common_options(CLI::App* cmd, CliArgs& args) {
    cmd->add_option("--config", args.config_path, "Run configuration file (key = value)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", args.seed, "Master seed (64-bit unsigned)");
    cmd->add_option("--out", args.out_dir, "Output directory");
    cmd->add_option("--jobs", args.jobs, "Worker threads; 0 = all hardware threads");
    cmd->add_flag("--emit-ppm", args.emit_ppm, "Also write PPM images where supported");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"draughtsim: Monte Carlo match simulator for a four-diagonal "
                 "checkers variant with offense/defense expertise and strategies"};
    app.require_subcommand(1);

    CliArgs args;
    CLI::App* play = app.add_subcommand("play", "Play a single match");
    CLI::App* batch = app.add_subcommand("batch", "Run a batch of matches");
    CLI::App* sweep =
        app.add_subcommand("sweep", "Sweep the (theta1, theta2) grid into a winning matrix");
    CLI::App* fo = app.add_subcommand(
        "fo-analyze", "Fully-offensive analysis: match-length histograms, advantage "
                      "curves, even-sequence distributions and decay fits");
    CLI::App* fit = app.add_subcommand(
        "fit-alpha", "Fully-offensive sequence collapse: fit the exponent of the "
                     "decay-rate scaling law");
    for (CLI::App* cmd : {play, batch, sweep, fo, fit}) add_common_options(cmd, args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        draughts::RunConfig cfg;
        if (!args.config_path.empty()) cfg = draughts::load_config(args.config_path);

        CLI::App* cmd = app.get_subcommands().front();
        if (cmd == play) cfg.mode = draughts::RunMode::Play;
        else if (cmd == batch) cfg.mode = draughts::RunMode::Batch;
        else if (cmd == sweep) cfg.mode = draughts::RunMode::Sweep;
        else if (cmd == fo) cfg.mode = draughts::RunMode::FoAnalyze;
        else cfg.mode = draughts::RunMode::FitAlpha;

        if (cmd->count("--seed") > 0) cfg.master_seed = args.seed;
        if (cmd->count("--out") > 0) cfg.out_dir = args.out_dir;
        if (cmd->count("--jobs") > 0) cfg.jobs = args.jobs;
        if (cmd->count("--emit-ppm") > 0) cfg.emit_ppm = true;

        draughts::execute(cfg);
        return 0;
    } catch (const draughts::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
