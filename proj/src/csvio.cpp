#include "draughts/csvio.hpp"

#include <cmath>
#include <cstdio>

namespace draughts {

std::string format_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string format_fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

static std::string format_prob(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

static const char* winner_label(Winner w) {
    switch (w) {
        case Winner::PlayerOne: return "1";
        case Winner::PlayerTwo: return "2";
        case Winner::Draw: return "draw";
    }
    return "?";
}

static const char* end_label(EndReason e) {
    switch (e) {
        case EndReason::Elimination: return "elimination";
        case EndReason::Stalemate: return "stalemate";
        case EndReason::Cap: return "cap";
    }
    return "?";
}

std::string batch_csv(const BatchResult& batch) {
    std::string out = "index,winner,tau,first_mover,ended_by\n";
    char buf[96];
    for (size_t i = 0; i < batch.records.size(); ++i) {
        const MatchRecord& r = batch.records[i];
        std::snprintf(buf, sizeof buf, "%zu,%s,%d,%d,%s\n", i, winner_label(r.winner),
                      r.tau, r.first_mover == Player::One ? 1 : 2,
                      end_label(r.ended_by));
        out += buf;
    }
    return out;
}

std::string trajectory_csv(const BatchResult& batch) {
    std::string out = "index,t,v,capture\n";
    char buf[64];
    for (size_t i = 0; i < batch.records.size(); ++i) {
        const MatchRecord& r = batch.records[i];
        for (size_t t = 0; t < r.v_trajectory.size(); ++t) {
            std::snprintf(buf, sizeof buf, "%zu,%zu,%d,%d\n", i, t + 1,
                          int(r.v_trajectory[t]), int(r.capture_plies[t]));
            out += buf;
        }
    }
    return out;
}

std::string matrix_csv(const WinningMatrix& matrix) {
    std::string out = "theta1";
    for (double t2 : matrix.grid.theta_values) out += "," + format_g(t2);
    out += '\n';
    for (int i = 0; i < matrix.grid.size(); ++i) {
        out += format_g(matrix.grid.theta_values[size_t(i)]);
        for (int j = 0; j < matrix.grid.size(); ++j)
            out += "," + format_fixed(matrix.at(i, j));
        out += '\n';
    }
    return out;
}

std::string matrix_draws_csv(const WinningMatrix& matrix) {
    std::string out = "theta1";
    for (double t2 : matrix.grid.theta_values) out += "," + format_g(t2);
    out += '\n';
    for (int i = 0; i < matrix.grid.size(); ++i) {
        out += format_g(matrix.grid.theta_values[size_t(i)]);
        for (int j = 0; j < matrix.grid.size(); ++j)
            out += "," + std::to_string(matrix.draws_at(i, j));
        out += '\n';
    }
    return out;
}

std::string matrix_ppm(const WinningMatrix& matrix) {
    const int k = matrix.grid.size();
    std::string out = "P6\n" + std::to_string(k) + " " + std::to_string(k) + "\n255\n";
    for (int i = k - 1; i >= 0; --i) {  // theta1 grows bottom to top
        for (int j = 0; j < k; ++j) {
            const double v = std::max(-1.0, std::min(1.0, matrix.at(i, j)));
            const uint8_t fade = uint8_t(std::lround(255.0 * (1.0 - std::abs(v))));
            const uint8_t r = v >= 0 ? 255 : fade;
            const uint8_t b = v >= 0 ? fade : 255;
            const uint8_t g = fade;
            out += char(r);
            out += char(g);
            out += char(b);
        }
    }
    return out;
}

std::string histogram_csv(const Histogram& hist) {
    std::string out = "bin_lo,bin_hi,count\n";
    for (size_t b = 0; b < hist.counts.size(); ++b) {
        out += format_g(hist.bin_edges[b]) + "," + format_g(hist.bin_edges[b + 1]) +
               "," + std::to_string(hist.counts[b]) + '\n';
    }
    if (hist.overflow > 0)
        out += format_g(hist.bin_edges.back()) + ",inf," +
               std::to_string(hist.overflow) + '\n';
    return out;
}

std::string advantage_curve_csv(const AdvantageCurve& curve) {
    std::string out = "t,mean_v,n\n";
    for (int t = 1; t <= curve.t_max; ++t)
        out += std::to_string(t) + "," + format_fixed(curve.mean_v[size_t(t - 1)]) +
               "," + std::to_string(curve.n) + '\n';
    return out;
}

std::string collapse_csv(const std::vector<AdvantageCurve>& curves) {
    std::string out = "t_delta_d,mean_v\n";
    for (const AdvantageCurve& c : curves)
        for (int t = 1; t <= c.t_max; ++t)
            out += format_fixed(t * c.delta_d) + "," +
                   format_fixed(c.mean_v[size_t(t - 1)]) + '\n';
    return out;
}

std::string sequence_csv(const SequenceDistribution& dist) {
    std::string out = "L,P\n";
    for (size_t i = 0; i < dist.lengths.size(); ++i)
        out += format_g(dist.lengths[i]) + "," + format_prob(dist.probs[i]) + '\n';
    return out;
}

std::string lambda_fits_csv(const std::vector<PairLambda>& fits) {
    std::string out = "d1,d2,lambda,r2\n";
    for (const PairLambda& f : fits)
        out += format_g(f.d1) + "," + format_g(f.d2) + "," + format_fixed(f.lambda) +
               "," + format_fixed(f.r_squared) + '\n';
    return out;
}

std::string alpha_dispersion_csv(const CollapseFit& fit) {
    std::string out = "alpha,dispersion\n";
    for (size_t i = 0; i < fit.alpha_grid.size(); ++i)
        out += format_g(fit.alpha_grid[i]) + "," +
               format_prob(fit.dispersion_curve[i]) + '\n';
    return out;
}

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

}  // namespace draughts
