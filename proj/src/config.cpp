#include "draughts/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace draughts {

const char* mode_name(RunMode mode) {
    switch (mode) {
        case RunMode::Play: return "play";
        case RunMode::Batch: return "batch";
        case RunMode::Sweep: return "sweep";
        case RunMode::FoAnalyze: return "fo_analyze";
        case RunMode::FitAlpha: return "fit_alpha";
    }
    return "?";
}

namespace {

std::string trim(const std::string& s) {
    const size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& field, const std::string& value) {
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(value.c_str(), &end);
    if (errno != 0 || end == value.c_str() || *end != '\0')
        throw ConfigError(field + ": not a number: '" + value + "'");
    return v;
}

long parse_long(const std::string& field, const std::string& value) {
    char* end = nullptr;
    errno = 0;
    const long v = std::strtol(value.c_str(), &end, 10);
    if (errno != 0 || end == value.c_str() || *end != '\0')
        throw ConfigError(field + ": not an integer: '" + value + "'");
    return v;
}

uint64_t parse_u64(const std::string& field, const std::string& value) {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (errno != 0 || end == value.c_str() || *end != '\0')
        throw ConfigError(field + ": not an unsigned integer: '" + value + "'");
    return v;
}

bool parse_bool(const std::string& field, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError(field + ": expected true/false: '" + value + "'");
}

std::vector<double> parse_double_list(const std::string& field, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(field, item));
    }
    if (out.empty()) throw ConfigError(field + ": empty list");
    return out;
}

double parse_probability(const std::string& field, const std::string& value) {
    const double v = parse_double(field, value);
    if (v < 0.0 || v > 1.0) throw ConfigError(field + ": must be in [0, 1], got " + value);
    return v;
}

void apply_agent_key(AgentSpec& agent, const std::string& section,
                     const std::string& key, const std::string& value) {
    const std::string field = section + "." + key;
    if (key == "d") {
        agent.expertise.d = parse_probability(field, value);
    } else if (key == "o") {
        agent.expertise.o = parse_probability(field, value);
    } else if (key == "theta") {
        agent.theta = parse_probability(field, value);
    } else if (key == "strategy") {
        if (value == "complementary") agent.strategy = Strategy::Complementary;
        else if (value == "fully_offensive") agent.strategy = Strategy::FullyOffensive;
        else throw ConfigError(field + ": unknown strategy '" + value + "'");
    } else {
        throw ConfigError(field + ": unknown key");
    }
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    bool grid_step_set = false;
    double grid_step = 0.05;
    long grid_n = cfg.grid.n_per_cell;
    std::vector<double> grid_values;

    std::string section;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const size_t hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(line_no) + ": malformed section");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "agent1" && section != "agent2" && section != "grid" &&
                section != "fo")
                throw ConfigError("unknown section [" + section + "]");
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");

        if (section == "agent1") {
            apply_agent_key(cfg.agent1, section, key, value);
        } else if (section == "agent2") {
            apply_agent_key(cfg.agent2, section, key, value);
        } else if (section == "grid") {
            const std::string field = "grid." + key;
            if (key == "theta_step") {
                grid_step = parse_double(field, value);
                if (grid_step <= 0.0 || grid_step > 1.0)
                    throw ConfigError(field + ": must be in (0, 1]");
                grid_step_set = true;
            } else if (key == "n_per_cell") {
                grid_n = parse_long(field, value);
                if (grid_n < 1) throw ConfigError(field + ": must be >= 1");
            } else if (key == "theta_values") {
                grid_values = parse_double_list(field, value);
            } else {
                throw ConfigError(field + ": unknown key");
            }
        } else if (section == "fo") {
            const std::string field = "fo." + key;
            if (key == "d_values") {
                cfg.d_values = parse_double_list(field, value);
                for (double d : cfg.d_values)
                    if (d < 0.0 || d > 1.0)
                        throw ConfigError(field + ": values must be in [0, 1]");
            } else if (key == "bin_width") {
                cfg.bin_width = int(parse_long(field, value));
                if (cfg.bin_width < 1) throw ConfigError(field + ": must be >= 1");
            } else if (key == "l_min") {
                cfg.l_min = int(parse_long(field, value));
            } else if (key == "l_max") {
                cfg.l_max = int(parse_long(field, value));
            } else {
                throw ConfigError(field + ": unknown key");
            }
        } else {
            if (key == "n") {
                cfg.n = parse_long(key, value);
            } else if (key == "seed") {
                cfg.master_seed = parse_u64(key, value);
            } else if (key == "max_plies") {
                cfg.max_plies = int(parse_long(key, value));
            } else if (key == "out") {
                cfg.out_dir = value;
            } else if (key == "jobs") {
                cfg.jobs = int(parse_long(key, value));
            } else if (key == "emit_ppm") {
                cfg.emit_ppm = parse_bool(key, value);
            } else if (key == "keep_trajectories") {
                cfg.keep_trajectories = parse_bool(key, value);
            } else {
                throw ConfigError(key + ": unknown key");
            }
        }
    }

    if (!grid_values.empty()) {
        cfg.grid.theta_values = grid_values;
        cfg.grid.n_per_cell = grid_n;
    } else if (grid_step_set || grid_n != cfg.grid.n_per_cell) {
        cfg.grid = SweepGrid::regular(grid_step, grid_n);
    }
    validate_config(cfg);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void validate_config(const RunConfig& config) {
    if (config.n < 1) throw ConfigError("n: must be >= 1");
    if (config.max_plies < 1) throw ConfigError("max_plies: must be >= 1");
    if (config.l_min < 1) throw ConfigError("fo.l_min: must be >= 1");
    if (config.l_max <= config.l_min)
        throw ConfigError("fo.l_max: must exceed fo.l_min");
    if (config.out_dir.empty()) throw ConfigError("out: must not be empty");
    try {
        config.grid.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("grid: ") + e.what());
    }
    if (config.d_values.empty()) throw ConfigError("fo.d_values: empty");
    auto sorted = config.d_values;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw ConfigError("fo.d_values: duplicate value");
}

}  // namespace draughts
