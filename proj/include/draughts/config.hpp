#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "draughts/agent.hpp"
#include "draughts/winmatrix.hpp"

namespace draughts {

enum class RunMode { Play, Batch, Sweep, FoAnalyze, FitAlpha };

const char* mode_name(RunMode mode);

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Resolved run configuration. Fields not set in the config file keep the
// defaults below; the CLI may override seed, out, jobs and emit_ppm.
struct RunConfig {
    RunMode mode = RunMode::Batch;
    AgentSpec agent1 = AgentSpec::complementary(0.5, 0.5, 0.5);
    AgentSpec agent2 = AgentSpec::complementary(0.5, 0.5, 0.5);
    SweepGrid grid = SweepGrid::default_grid();
    long n = 100000;
    uint64_t master_seed = 1;
    int max_plies = kDefaultMaxPlies;
    std::string out_dir = "out";
    int jobs = 1;  // <= 0 selects the hardware thread count
    bool emit_ppm = false;
    bool keep_trajectories = false;

    // fo-analyze / fit-alpha settings
    std::vector<double> d_values{0.0, 0.5, 0.75, 1.0};
    int bin_width = 5;
    int l_min = 2;
    int l_max = 15;
};

// Parses the line-oriented `key = value` format with [agent1], [agent2],
// [grid] and [fo] sections; '#' starts a comment. Unknown keys and
// out-of-range values raise ConfigError naming the offending field.
RunConfig parse_config_text(const std::string& text);

// parse_config_text over the contents of path; missing or unreadable
// files raise ConfigError.
RunConfig load_config(const std::string& path);

void validate_config(const RunConfig& config);

}  // namespace draughts
