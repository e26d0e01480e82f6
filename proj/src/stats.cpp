#include "draughts/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace draughts {

std::vector<double> Histogram::density() const {
    std::vector<double> out(counts.size());
    for (size_t i = 0; i < counts.size(); ++i)
        out[i] = n_total > 0 ? double(counts[i]) / double(n_total) : 0.0;
    return out;
}

Histogram total_time_histogram(const std::vector<int>& taus, int bin_width,
                               int max_edge) {
    if (taus.empty())
        throw std::invalid_argument("total_time_histogram: empty sample");
    if (bin_width < 1)
        throw std::invalid_argument("total_time_histogram: bin_width must be >= 1");

    const auto [lo_it, hi_it] = std::minmax_element(taus.begin(), taus.end());
    const int lo = (*lo_it / bin_width) * bin_width;
    int last_edge = ((*hi_it / bin_width) + 1) * bin_width;
    if (max_edge > 0 && max_edge < last_edge) {
        last_edge = std::max(lo + bin_width, (max_edge / bin_width) * bin_width);
    }
    const int bins = (last_edge - lo) / bin_width;

    Histogram h;
    h.n_total = long(taus.size());
    h.counts.assign(size_t(bins), 0);
    h.bin_edges.resize(size_t(bins) + 1);
    for (int b = 0; b <= bins; ++b) h.bin_edges[size_t(b)] = lo + b * bin_width;
    for (int tau : taus) {
        if (tau >= last_edge) {
            ++h.overflow;
        } else {
            ++h.counts[size_t((tau - lo) / bin_width)];
        }
    }
    return h;
}

double ks_distance(const std::vector<double>& sample_a,
                   const std::vector<double>& sample_b) {
    if (sample_a.empty() || sample_b.empty())
        throw std::invalid_argument("ks_distance: empty sample");
    std::vector<double> a(sample_a), b(sample_b);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    const double na = double(a.size()), nb = double(b.size());
    size_t ia = 0, ib = 0;
    double sup = 0.0;
    while (ia < a.size() && ib < b.size()) {
        const double x = std::min(a[ia], b[ib]);
        while (ia < a.size() && a[ia] <= x) ++ia;
        while (ib < b.size() && b[ib] <= x) ++ib;
        sup = std::max(sup, std::abs(double(ia) / na - double(ib) / nb));
    }
    return sup;
}

AdvantageCurve mean_advantage(const std::vector<MatchRecord>& records, int t_max,
                              double delta_d) {
    if (records.empty()) throw std::invalid_argument("mean_advantage: no records");
    if (t_max < 1) throw std::invalid_argument("mean_advantage: t_max must be >= 1");
    for (const MatchRecord& r : records)
        if (int(r.v_trajectory.size()) < t_max)
            throw std::invalid_argument(
                "mean_advantage: record shorter than t_max; cap t_max at min tau");

    AdvantageCurve curve;
    curve.t_max = t_max;
    curve.n = long(records.size());
    curve.delta_d = delta_d;
    curve.mean_v.assign(size_t(t_max), 0.0);
    for (const MatchRecord& r : records)
        for (int t = 0; t < t_max; ++t) curve.mean_v[size_t(t)] += r.v_trajectory[size_t(t)];
    for (double& v : curve.mean_v) v /= double(records.size());
    return curve;
}

int min_tau(const std::vector<MatchRecord>& records) {
    if (records.empty()) throw std::invalid_argument("min_tau: no records");
    int m = std::numeric_limits<int>::max();
    for (const MatchRecord& r : records) m = std::min(m, r.tau);
    return m;
}

std::vector<double> taus_of(const std::vector<MatchRecord>& records) {
    std::vector<double> out;
    out.reserve(records.size());
    for (const MatchRecord& r : records) out.push_back(double(r.tau));
    return out;
}

std::vector<int> taus_int(const std::vector<MatchRecord>& records) {
    std::vector<int> out;
    out.reserve(records.size());
    for (const MatchRecord& r : records) out.push_back(r.tau);
    return out;
}

CollapseRegression advantage_collapse(const std::vector<AdvantageCurve>& curves) {
    if (curves.empty()) throw std::invalid_argument("advantage_collapse: no curves");

    CollapseRegression reg;
    double sxy = 0.0, sxx = 0.0, sy = 0.0;
    long npts = 0;
    for (const AdvantageCurve& c : curves) {
        double cxy = 0.0, cxx = 0.0;
        for (int t = 1; t <= c.t_max; ++t) {
            const double x = t * c.delta_d;
            const double y = c.mean_v[size_t(t - 1)];
            cxy += x * y;
            cxx += x * x;
            sy += y;
            ++npts;
        }
        sxy += cxy;
        sxx += cxx;
        reg.per_curve_slopes.push_back(
            cxx > 0.0 ? cxy / cxx : std::numeric_limits<double>::quiet_NaN());
    }
    if (sxx <= 0.0)
        throw std::invalid_argument("advantage_collapse: every curve has delta_d == 0");

    reg.slope = sxy / sxx;
    const double ybar = sy / double(npts);
    double ss_res = 0.0, ss_tot = 0.0;
    for (const AdvantageCurve& c : curves) {
        for (int t = 1; t <= c.t_max; ++t) {
            const double x = t * c.delta_d;
            const double y = c.mean_v[size_t(t - 1)];
            ss_res += (y - reg.slope * x) * (y - reg.slope * x);
            ss_tot += (y - ybar) * (y - ybar);
        }
    }
    reg.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return reg;
}

std::vector<int> even_sequences(const std::vector<int8_t>& v_trajectory,
                                const std::vector<uint8_t>& /*capture_plies*/) {
    std::vector<int> runs;
    if (v_trajectory.empty()) return runs;

    std::vector<int8_t> v(v_trajectory);
    for (size_t t = 1; t + 1 < v.size(); ++t)
        if (v[t] != v[t - 1] && v[t + 1] == v[t - 1]) v[t] = v[t - 1];

    int len = 1;
    for (size_t t = 1; t < v.size(); ++t) {
        if (v[t] == v[t - 1]) {
            ++len;
        } else {
            runs.push_back(len);
            len = 1;
        }
    }
    runs.push_back(len);
    return runs;
}

SequenceDistribution sequence_distribution_from_lengths(const std::vector<int>& lengths,
                                                        double d1, double d2) {
    if (lengths.empty())
        throw std::invalid_argument("sequence_distribution: no lengths");
    std::map<int, long> counts;
    for (int len : lengths) ++counts[len];

    SequenceDistribution dist;
    dist.d1 = d1;
    dist.d2 = d2;
    dist.n_samples = long(lengths.size());
    for (const auto& [len, count] : counts) {
        dist.lengths.push_back(len);
        dist.probs.push_back(double(count) / double(lengths.size()));
    }
    return dist;
}

SequenceDistribution make_sequence_distribution(const std::vector<MatchRecord>& records,
                                                double d1, double d2) {
    std::vector<int> all;
    for (const MatchRecord& r : records) {
        const std::vector<int> runs = even_sequences(r.v_trajectory, r.capture_plies);
        all.insert(all.end(), runs.begin(), runs.end());
    }
    return sequence_distribution_from_lengths(all, d1, d2);
}

namespace {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
};

LineFit least_squares_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = double(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    LineFit fit;
    const double denom = n * sxx - sx * sx;
    fit.slope = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0.0, ss_tot = 0.0;
    const double ybar = sy / n;
    for (size_t i = 0; i < xs.size(); ++i) {
        const double fitted = fit.intercept + fit.slope * xs[i];
        ss_res += (ys[i] - fitted) * (ys[i] - fitted);
        ss_tot += (ys[i] - ybar) * (ys[i] - ybar);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

}  // namespace

LambdaFit fit_lambda(const SequenceDistribution& dist, int l_min, int l_max) {
    std::vector<double> xs, ys;
    for (size_t i = 0; i < dist.lengths.size(); ++i) {
        const double len = dist.lengths[i];
        if (len < l_min || len > l_max || dist.probs[i] <= 0.0) continue;
        xs.push_back(len);
        ys.push_back(std::log(dist.probs[i]));
    }
    if (xs.size() < 3)
        throw std::invalid_argument(
            "fit_lambda: fewer than 3 populated bins in [l_min, l_max]");

    const LineFit fit = least_squares_line(xs, ys);
    return {-fit.slope, fit.r_squared, int(xs.size())};
}

double geometric_lambda_mle(const std::vector<int>& lengths) {
    if (lengths.empty()) throw std::invalid_argument("geometric_lambda_mle: no data");
    double sum = 0.0;
    for (int len : lengths) sum += len;
    const double mean = sum / double(lengths.size());
    if (mean <= 1.0) return std::numeric_limits<double>::infinity();
    return -std::log(1.0 - 1.0 / mean);
}

namespace {

// Exact KS distance between two discrete distributions whose supports are
// scaled copies of integer lattices. Values closer than a relative 1e-9
// are treated as the same jump point.
double ks_distance_weighted(const std::vector<double>& va, const std::vector<double>& pa,
                            const std::vector<double>& vb, const std::vector<double>& pb) {
    size_t ia = 0, ib = 0;
    double cdfa = 0.0, cdfb = 0.0, sup = 0.0;
    while (ia < va.size() || ib < vb.size()) {
        double x;
        if (ia == va.size()) x = vb[ib];
        else if (ib == vb.size()) x = va[ia];
        else x = std::min(va[ia], vb[ib]);
        const double eps = 1e-9 * std::max(1.0, std::abs(x));
        while (ia < va.size() && va[ia] <= x + eps) cdfa += pa[ia++];
        while (ib < vb.size() && vb[ib] <= x + eps) cdfb += pb[ib++];
        sup = std::max(sup, std::abs(cdfa - cdfb));
    }
    return sup;
}

}  // namespace

std::vector<double> default_alpha_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);
    return grid;
}

CollapseFit fit_alpha(const std::vector<SequenceDistribution>& dists,
                      const std::vector<double>& alpha_grid, int l_min, int l_max) {
    if (alpha_grid.empty()) throw std::invalid_argument("fit_alpha: empty alpha grid");
    std::vector<double> mean_ds;
    for (const SequenceDistribution& d : dists) {
        const double md = d.mean_d();
        if (md >= 1.0)
            throw std::invalid_argument("fit_alpha: pair with <d> >= 1 cannot collapse");
        bool fresh = true;
        for (double seen : mean_ds) fresh = fresh && std::abs(seen - md) > 1e-12;
        if (fresh) mean_ds.push_back(md);
    }
    if (mean_ds.size() < 3)
        throw std::invalid_argument("fit_alpha: need >= 3 pairs with distinct <d>");

    CollapseFit fit;
    fit.alpha_grid = alpha_grid;
    for (const SequenceDistribution& d : dists) {
        const LambdaFit lf = fit_lambda(d, l_min, l_max);
        fit.lambda_by_pair.push_back({d.d1, d.d2, lf.lambda, lf.r_squared});
    }

    std::vector<std::vector<double>> scaled(dists.size());
    size_t best = 0;
    for (size_t g = 0; g < alpha_grid.size(); ++g) {
        const double alpha = alpha_grid[g];
        for (size_t i = 0; i < dists.size(); ++i) {
            const double scale = std::pow(1.0 - dists[i].mean_d(), alpha);
            scaled[i].resize(dists[i].lengths.size());
            for (size_t k = 0; k < dists[i].lengths.size(); ++k)
                scaled[i][k] = dists[i].lengths[k] * scale;
        }
        double total = 0.0;
        int pairs = 0;
        for (size_t i = 0; i < dists.size(); ++i)
            for (size_t j = i + 1; j < dists.size(); ++j) {
                total += ks_distance_weighted(scaled[i], dists[i].probs, scaled[j],
                                              dists[j].probs);
                ++pairs;
            }
        fit.dispersion_curve.push_back(total / pairs);
        if (fit.dispersion_curve[g] < fit.dispersion_curve[best]) best = g;
    }
    fit.alpha = alpha_grid[best];
    fit.dispersion = fit.dispersion_curve[best];
    return fit;
}

}  // namespace draughts
