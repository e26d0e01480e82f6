#pragma once

#include <vector>

#include "draughts/match.hpp"

namespace draughts {

struct Histogram {
    std::vector<double> bin_edges;  // ascending; counts.size() + 1 entries
    std::vector<long> counts;
    long n_total = 0;
    long overflow = 0;  // values at or beyond the last edge, never dropped

    std::vector<double> density() const;  // counts / n_total
};

// Fixed-width binning of match lengths starting from min(tau) rounded down
// to a multiple of bin_width. With max_edge > 0 the edges stop at that
// boundary and larger values accumulate in the overflow counter; otherwise
// the bins cover the whole sample. Throws on an empty sample.
Histogram total_time_histogram(const std::vector<int>& taus, int bin_width,
                               int max_edge = 0);

// Two-sample Kolmogorov-Smirnov distance: sup |F_a - F_b| over the
// empirical CDFs, in [0, 1]. Throws on an empty sample.
double ks_distance(const std::vector<double>& sample_a,
                   const std::vector<double>& sample_b);

struct AdvantageCurve {
    int t_max = 0;
    std::vector<double> mean_v;  // <v(t)> for t = 1..t_max
    long n = 0;
    double delta_d = 0.0;  // d1 - d2 of the generating pair
};

// Mean advantage over all records for t = 1..t_max. Every record must
// reach t_max (set t_max <= min tau); shorter records are an error.
AdvantageCurve mean_advantage(const std::vector<MatchRecord>& records, int t_max,
                              double delta_d);

int min_tau(const std::vector<MatchRecord>& records);
std::vector<double> taus_of(const std::vector<MatchRecord>& records);
std::vector<int> taus_int(const std::vector<MatchRecord>& records);

struct CollapseRegression {
    double slope = 0.0;      // pooled fit of <v> against t * delta_d, through origin
    double r_squared = 0.0;
    std::vector<double> per_curve_slopes;  // NaN where delta_d == 0
};

// Pooled least-squares regression of all curve points against x = t *
// delta_d through the origin. Throws unless at least one curve has
// delta_d > 0.
CollapseRegression advantage_collapse(const std::vector<AdvantageCurve>& curves);

// Lengths of maximal constant-advantage runs after exchange smoothing:
// any single-ply excursion (v(t) != v(t-1) with v(t+1) back at v(t-1)) is
// flattened before runs are measured, so a capture immediately undone by
// the opposite capture does not break the run. The run lengths sum to the
// trajectory length. capture_plies is part of the record interface but
// does not enter the computation.
std::vector<int> even_sequences(const std::vector<int8_t>& v_trajectory,
                                const std::vector<uint8_t>& capture_plies);

// Empirical distribution of even-sequence lengths. Match data has integer
// support; synthetic inputs (e.g. exact exponential quantiles) may use
// real-valued support, which the collapse machinery below handles the
// same way.
struct SequenceDistribution {
    std::vector<double> lengths;  // ascending support
    std::vector<double> probs;    // same size, sums to 1
    long n_samples = 0;
    double d1 = 0.0;
    double d2 = 0.0;

    double mean_d() const { return 0.5 * (d1 + d2); }
};

SequenceDistribution make_sequence_distribution(const std::vector<MatchRecord>& records,
                                                double d1, double d2);
SequenceDistribution sequence_distribution_from_lengths(const std::vector<int>& lengths,
                                                        double d1, double d2);

struct LambdaFit {
    double lambda = 0.0;  // decay rate: minus the slope of ln P(L) vs L
    double r_squared = 0.0;
    int bins_used = 0;
};

// Least-squares line through (L, ln P(L)) over the populated support in
// [l_min, l_max]. Throws with fewer than 3 populated bins in range.
LambdaFit fit_lambda(const SequenceDistribution& dist, int l_min, int l_max);

// Maximum-likelihood decay rate for a geometric law P(L) ~ e^{-lambda L},
// L = 1, 2, ...: p = 1 / mean(L), lambda = -ln(1 - p). Independent
// cross-check for fit_lambda.
double geometric_lambda_mle(const std::vector<int>& lengths);

struct PairLambda {
    double d1 = 0.0;
    double d2 = 0.0;
    double lambda = 0.0;
    double r_squared = 0.0;
};

struct CollapseFit {
    std::vector<PairLambda> lambda_by_pair;
    double alpha = 0.0;       // dispersion minimizer over the grid
    double dispersion = 0.0;  // dispersion at alpha
    std::vector<double> alpha_grid;
    std::vector<double> dispersion_curve;
};

std::vector<double> default_alpha_grid();  // 0, 0.01, ..., 1

// Collapse of sequence-length distributions under L -> L * (1 - <d>)^alpha.
// For each candidate alpha the dispersion is the mean pairwise KS distance
// between the rescaled distributions (computed exactly from the weighted
// ECDFs); the fit picks the dispersion minimizer. Requires >= 3
// distributions with distinct <d> < 1. lambda_by_pair carries the
// per-pair fit_lambda results over [l_min, l_max].
CollapseFit fit_alpha(const std::vector<SequenceDistribution>& dists,
                      const std::vector<double>& alpha_grid, int l_min, int l_max);

}  // namespace draughts
