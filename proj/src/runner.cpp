#include "draughts/runner.hpp"

#include <cinttypes>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "draughts/csvio.hpp"
#include "draughts/stats.hpp"

namespace draughts {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct OutputSink {
    fs::path dir;
    std::vector<std::pair<std::string, uint64_t>> written;

    void write(const std::string& name, const std::string& bytes) {
        std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write output file: " + name);
        out.write(bytes.data(), std::streamsize(bytes.size()));
        if (!out) throw std::runtime_error("write failed: " + name);
        written.emplace_back(name, fnv1a64(bytes));
    }
};

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json agent_json(const AgentSpec& a) {
    return {{"d", a.expertise.d},
            {"o", a.expertise.o},
            {"strategy",
             a.strategy == Strategy::Complementary ? "complementary" : "fully_offensive"},
            {"theta", a.theta}};
}

json config_json(const RunConfig& c) {
    return {{"mode", mode_name(c.mode)},
            {"n", c.n},
            {"seed", c.master_seed},
            {"max_plies", c.max_plies},
            {"out", c.out_dir},
            {"jobs", c.jobs},
            {"emit_ppm", c.emit_ppm},
            {"keep_trajectories", c.keep_trajectories},
            {"agent1", agent_json(c.agent1)},
            {"agent2", agent_json(c.agent2)},
            {"grid", {{"theta_values", c.grid.theta_values}, {"n_per_cell", c.grid.n_per_cell}}},
            {"fo",
             {{"d_values", c.d_values},
              {"bin_width", c.bin_width},
              {"l_min", c.l_min},
              {"l_max", c.l_max}}}};
}

std::string pair_tag(double d1, double d2) {
    return "d1_" + format_g(d1) + "_d2_" + format_g(d2);
}

std::string format_prob(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// Expertise pairs explored in the fully-offensive modes: d1 >= d2 over the
// configured d grid, with the non-terminating d1 = d2 = 1 pair dropped.
std::vector<std::pair<double, double>> fo_pairs(const std::vector<double>& d_values) {
    std::vector<double> ds(d_values);
    std::sort(ds.begin(), ds.end());
    std::vector<std::pair<double, double>> pairs;
    for (size_t i = 0; i < ds.size(); ++i)
        for (size_t j = 0; j <= i; ++j)
            if (!(ds[i] == 1.0 && ds[j] == 1.0)) pairs.emplace_back(ds[i], ds[j]);
    return pairs;
}

void run_play(const RunConfig& cfg, OutputSink& sink) {
    BatchResult batch = run_batch(cfg.agent1, cfg.agent2, 1, cfg.master_seed,
                                  cfg.max_plies, Retention::Trajectories, 1);
    const MatchRecord& rec = batch.records.front();
    sink.write("match.csv", batch_csv(batch));
    sink.write("trajectory.csv", trajectory_csv(batch));
    std::printf("winner=%s tau=%d first_mover=%d ended_by=%s\n",
                rec.winner == Winner::Draw ? "draw"
                : rec.winner == Winner::PlayerOne ? "1" : "2",
                rec.tau, rec.first_mover == Player::One ? 1 : 2,
                rec.ended_by == EndReason::Elimination ? "elimination"
                : rec.ended_by == EndReason::Stalemate ? "stalemate" : "cap");
}

void run_batch_mode(const RunConfig& cfg, OutputSink& sink) {
    const Retention retention =
        cfg.keep_trajectories ? Retention::Trajectories : Retention::Summaries;
    BatchResult batch = run_batch(cfg.agent1, cfg.agent2, cfg.n, cfg.master_seed,
                                  cfg.max_plies, retention, cfg.jobs);
    sink.write("batch.csv", batch_csv(batch));
    if (cfg.keep_trajectories) sink.write("trajectories.csv", trajectory_csv(batch));
    std::printf("n=%ld wins1=%ld wins2=%ld draws=%ld\n", batch.n, batch.wins1,
                batch.wins2, batch.draws);
}

void run_sweep(const RunConfig& cfg, OutputSink& sink) {
    const WinningMatrix matrix =
        build_winning_matrix(cfg.agent1.expertise, cfg.agent2.expertise, cfg.grid,
                             cfg.master_seed, cfg.max_plies, cfg.jobs);
    sink.write("winmatrix.csv", matrix_csv(matrix));
    sink.write("winmatrix_draws.csv", matrix_draws_csv(matrix));
    if (cfg.emit_ppm) sink.write("winmatrix.ppm", matrix_ppm(matrix));
    std::printf("sweep done: %dx%d cells, %ld matches per cell\n", cfg.grid.size(),
                cfg.grid.size(), cfg.grid.n_per_cell);
}

void run_fo_analyze(const RunConfig& cfg, OutputSink& sink) {
    std::vector<PairLambda> fits;
    std::vector<AdvantageCurve> unequal_curves;
    for (const auto& [d1, d2] : fo_pairs(cfg.d_values)) {
        const BatchResult batch =
            run_batch(AgentSpec::fully_offensive(d1), AgentSpec::fully_offensive(d2),
                      cfg.n, cfg.master_seed, cfg.max_plies, Retention::Trajectories,
                      cfg.jobs);
        const std::string tag = pair_tag(d1, d2);

        sink.write("tau_hist_" + tag + ".csv",
                   histogram_csv(total_time_histogram(taus_int(batch.records),
                                                      cfg.bin_width)));

        const AdvantageCurve curve =
            mean_advantage(batch.records, min_tau(batch.records), d1 - d2);
        sink.write("adv_curve_" + tag + ".csv", advantage_curve_csv(curve));
        if (d1 > d2) unequal_curves.push_back(curve);

        const SequenceDistribution dist = make_sequence_distribution(batch.records, d1, d2);
        sink.write("seq_dist_" + tag + ".csv", sequence_csv(dist));
        const LambdaFit lf = fit_lambda(dist, cfg.l_min, cfg.l_max);
        fits.push_back({d1, d2, lf.lambda, lf.r_squared});
        std::printf("pair %s: min_tau=%d lambda=%s r2=%s\n", tag.c_str(), curve.t_max,
                    format_fixed(lf.lambda).c_str(), format_fixed(lf.r_squared).c_str());
    }
    sink.write("lambda_fits.csv", lambda_fits_csv(fits));
    if (!unequal_curves.empty()) {
        sink.write("adv_collapse.csv", collapse_csv(unequal_curves));
        const CollapseRegression reg = advantage_collapse(unequal_curves);
        std::printf("advantage collapse: slope=%s r2=%s\n",
                    format_fixed(reg.slope).c_str(), format_fixed(reg.r_squared).c_str());
    }
}

void run_fit_alpha(const RunConfig& cfg, OutputSink& sink) {
    std::vector<SequenceDistribution> dists;
    for (const auto& [d1, d2] : fo_pairs(cfg.d_values)) {
        const BatchResult batch =
            run_batch(AgentSpec::fully_offensive(d1), AgentSpec::fully_offensive(d2),
                      cfg.n, cfg.master_seed, cfg.max_plies, Retention::Trajectories,
                      cfg.jobs);
        dists.push_back(make_sequence_distribution(batch.records, d1, d2));
        sink.write("seq_dist_" + pair_tag(d1, d2) + ".csv", sequence_csv(dists.back()));
    }
    const CollapseFit fit =
        fit_alpha(dists, default_alpha_grid(), cfg.l_min, cfg.l_max);
    sink.write("lambda_fits.csv", lambda_fits_csv(fit.lambda_by_pair));
    sink.write("alpha_dispersion.csv", alpha_dispersion_csv(fit));
    std::printf("alpha=%s dispersion=%s\n", format_g(fit.alpha).c_str(),
                format_prob(fit.dispersion).c_str());
}

}  // namespace

RunManifest execute(const RunConfig& config) {
    validate_config(config);
    OutputSink sink{fs::path(config.out_dir), {}};
    fs::create_directories(sink.dir);

    switch (config.mode) {
        case RunMode::Play: run_play(config, sink); break;
        case RunMode::Batch: run_batch_mode(config, sink); break;
        case RunMode::Sweep: run_sweep(config, sink); break;
        case RunMode::FoAnalyze: run_fo_analyze(config, sink); break;
        case RunMode::FitAlpha: run_fit_alpha(config, sink); break;
    }

    RunManifest manifest;
    manifest.mode = mode_name(config.mode);
    manifest.timestamp_utc = utc_timestamp();
    manifest.outputs = sink.written;

    json doc = {{"tool", kToolName},
                {"version", kToolVersion},
                {"created_utc", manifest.timestamp_utc},
                {"config", config_json(config)},
                {"outputs", json::array()}};
    for (const auto& [name, checksum] : sink.written) {
        char hex[32];
        std::snprintf(hex, sizeof hex, "%016" PRIx64, checksum);
        doc["outputs"].push_back({{"file", name}, {"fnv1a64", hex}});
    }
    std::ofstream out(sink.dir / "manifest.json", std::ios::binary | std::ios::trunc);
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write manifest.json");
    return manifest;
}

}  // namespace draughts
