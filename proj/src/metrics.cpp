#include "pasim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "pasim/errors.hpp"

namespace pasim {

namespace {

constexpr double kInvLn2 = 1.4426950408889634074;

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// log2(1 + exp(-x)), stable for large |x|
inline double f_loss(double x) {
    if (x >= 0.0) return std::log1p(std::exp(-x)) * kInvLn2;
    return (-x + std::log1p(std::exp(x))) * kInvLn2;
}

}  // namespace

int BinEdges::folded_bin(double v) const {
    auto it = std::upper_bound(folded.begin(), folded.end(), v);
    int idx = static_cast<int>(it - folded.begin()) - 1;
    return std::clamp(idx, 0, folded_bins() - 1);
}

int BinEdges::signed_bin(double v) const {
    auto it = std::upper_bound(signed_.begin(), signed_.end(), v);
    int idx = static_cast<int>(it - signed_.begin()) - 1;
    return std::clamp(idx, 0, signed_bins() - 1);
}

BinEdges quantile_edges(std::span<const double> values, int bins, double llr_max) {
    if (bins < 2 || bins % 2 != 0) throw ConfigError("histogram needs an even bin count >= 2");
    int half = bins / 2;

    // Quantiles of |v| read from a fine scratch grid; resolution llr_max/2^16
    // only perturbs where a bin boundary falls, not what the bins estimate.
    // Quantile levels are skewed as (j/half)^1.5: the bit posterior varies
    // fastest at small magnitudes, and plain equal-mass bins there measurably
    // exceed the 1e-3 discretization budget at operating SNRs.
    constexpr int kGrid = 1 << 16;
    std::vector<std::int64_t> grid(kGrid, 0);
    std::int64_t n = 0;
    for (double v : values) {
        double a = std::abs(v);
        int cell = std::min(static_cast<int>(a / llr_max * kGrid), kGrid - 1);
        grid[cell] += 1;
        n += 1;
    }
    BinEdges e;
    e.folded.push_back(0.0);
    std::int64_t cum = 0;
    int cell = 0;
    for (int j = 1; j < half; ++j) {
        double level = std::pow(static_cast<double>(j) / half, 1.5);
        auto want = static_cast<std::int64_t>(std::ceil(static_cast<double>(n) * level));
        while (cell < kGrid && cum < want) cum += grid[cell++];
        double edge = llr_max * static_cast<double>(cell) / kGrid;
        if (edge > e.folded.back()) e.folded.push_back(edge);
    }
    if (e.folded.back() < llr_max) e.folded.push_back(llr_max);

    e.signed_.resize(2 * e.folded.size() - 1);
    int nf = static_cast<int>(e.folded.size());
    for (int j = 0; j < nf; ++j) {
        e.signed_[nf - 1 - j] = -e.folded[j];
        e.signed_[nf - 1 + j] = e.folded[j];
    }
    return e;
}

BitConditionalHistogram conditional_histogram(std::span<const std::uint8_t> bits,
                                              std::span<const double> llrs, int bins,
                                              double llr_max) {
    BitConditionalHistogram h;
    h.edges = quantile_edges(llrs, bins, llr_max);
    h.count0.assign(h.edges.signed_bins(), 0.0);
    h.count1.assign(h.edges.signed_bins(), 0.0);
    for (std::size_t j = 0; j < llrs.size(); ++j) {
        int bin = h.edges.signed_bin(llrs[j]);
        if (bits[j]) {
            h.count1[bin] += 1;
            h.total1 += 1;
        } else {
            h.count0[bin] += 1;
            h.total0 += 1;
        }
    }
    return h;
}

AsymmetricHistogram asymmetric_histogram(std::span<const std::uint8_t> bits,
                                         std::span<const double> llrs, int bins,
                                         double llr_max) {
    AsymmetricHistogram h;
    h.edges = quantile_edges(llrs, bins, llr_max);  // |La| == |L|
    h.signed_count.assign(h.edges.signed_bins(), 0.0);
    h.folded_count.assign(h.edges.folded_bins(), 0.0);
    int zero_pos = h.edges.signed_bin(0.0);  // bin starting at 0
    for (std::size_t j = 0; j < llrs.size(); ++j) {
        double la = bits[j] ? -llrs[j] : llrs[j];
        if (la == 0.0) {
            // a zero LLR carries no sign information: split across the boundary
            h.signed_count[zero_pos] += 0.5;
            h.signed_count[zero_pos - 1] += 0.5;
        } else {
            h.signed_count[h.edges.signed_bin(la)] += 1;
        }
        h.folded_count[h.edges.folded_bin(std::abs(la))] += 1;
        h.total += 1;
    }
    return h;
}

double differential_entropy_bits(std::span<const double> probs,
                                 std::span<const double> widths) {
    double h = 0.0;
    for (std::size_t j = 0; j < probs.size(); ++j) {
        if (probs[j] > 0.0) h -= probs[j] * std::log2(probs[j] / widths[j]);
    }
    return h;
}

double mi_from_histogram(const BitConditionalHistogram& h, double prior0) {
    if (h.total0 == 0 || h.total1 == 0) return 0.0;  // no evidence of separation
    double prior1 = 1.0 - prior0;
    double mi = 0.0;
    for (std::size_t j = 0; j < h.count0.size(); ++j) {
        double p0 = h.total0 > 0 ? h.count0[j] / h.total0 : 0.0;
        double p1 = h.total1 > 0 ? h.count1[j] / h.total1 : 0.0;
        double mix = prior0 * p0 + prior1 * p1;
        if (p0 > 0.0) mi += prior0 * p0 * std::log2(p0 / mix);
        if (p1 > 0.0) mi += prior1 * p1 * std::log2(p1 / mix);
    }
    return mi;
}

double asi_from_histogram(const AsymmetricHistogram& h) {
    if (h.total <= 0) return 0.0;
    int nf = h.edges.folded_bins();
    std::vector<double> pf(nf), wf(nf);
    for (int j = 0; j < nf; ++j) {
        pf[j] = h.folded_count[j] / h.total;
        wf[j] = h.edges.folded[j + 1] - h.edges.folded[j];
    }
    int ns = h.edges.signed_bins();
    std::vector<double> ps(ns), ws(ns);
    for (int j = 0; j < ns; ++j) {
        ps[j] = h.signed_count[j] / h.total;
        ws[j] = h.edges.signed_[j + 1] - h.edges.signed_[j];
    }
    return 1.0 + differential_entropy_bits(pf, wf) - differential_entropy_bits(ps, ws);
}

double ber_pre(const LlrTrace& trace) {
    if (trace.size() == 0) throw DataError("ber_pre: empty trace");
    double errors = 0.0;
    for (std::size_t j = 0; j < trace.size(); ++j) {
        double la = trace.asym(j);
        if (la < 0.0)
            errors += 1.0;
        else if (la == 0.0)
            errors += 0.5;  // unbiased tie-break at L = 0
    }
    return errors / static_cast<double>(trace.size());
}

double ber_post(std::span<const std::uint8_t> sent, std::span<const std::uint8_t> decoded) {
    if (sent.size() != decoded.size() || sent.empty())
        throw DataError("ber_post: length mismatch");
    std::size_t errors = 0;
    for (std::size_t j = 0; j < sent.size(); ++j) errors += sent[j] != decoded[j];
    return static_cast<double>(errors) / static_cast<double>(sent.size());
}

double mc_air_estimate(const LlrTrace& trace) {
    double acc = 0.0;
    for (std::size_t j = 0; j < trace.size(); ++j) acc += f_loss(trace.asym(j));
    return 1.0 - acc / static_cast<double>(trace.size());
}

MetricEstimates estimate_metrics(const LlrTrace& trace, const BitStats& priors,
                                 int bins, double llr_max) {
    const int m = static_cast<int>(priors.p0_trib.size());
    if (trace.size() == 0) throw DataError("estimate_metrics: empty trace");
    if (trace.size() < 10000)
        std::fprintf(stderr, "warning: %zu LLR samples; histogram metrics want >= 1e4\n",
                     trace.size());

    MetricEstimates est;
    est.samples = trace.size();
    est.ber_pre = ber_pre(trace);
    est.i_mc_raw = mc_air_estimate(trace);
    est.i_mc = clamp01(est.i_mc_raw);

    // per-tributary conditionals for I_n and the NGMI entropies
    std::vector<std::vector<std::uint8_t>> bits_i(m);
    std::vector<std::vector<double>> llr_i(m);
    for (int i = 0; i < m; ++i) {
        bits_i[i].reserve(trace.size() / m + 1);
        llr_i[i].reserve(trace.size() / m + 1);
    }
    double pooled_zeros = 0.0;
    for (std::size_t j = 0; j < trace.size(); ++j) {
        bits_i[trace.trib[j]].push_back(trace.bit[j]);
        llr_i[trace.trib[j]].push_back(trace.llr[j]);
        pooled_zeros += trace.bit[j] == 0;
    }
    est.emp_h_pooled = binary_entropy(pooled_zeros / static_cast<double>(trace.size()));

    est.mi_trib.resize(m);
    double cond_entropy_sum = 0.0;  // sum of H(B_i) - I(B_i;L_i)
    for (int i = 0; i < m; ++i) {
        auto h = conditional_histogram(bits_i[i], llr_i[i], bins, llr_max);
        est.mi_trib[i] = mi_from_histogram(h, priors.p0_trib[i]);
        cond_entropy_sum += priors.h_trib[i] - est.mi_trib[i];
    }
    est.i_n_raw = (priors.h_joint - cond_entropy_sum) / priors.h_joint;
    est.r_bmd = std::max(0.0, priors.h_joint - cond_entropy_sum);
    est.i_n = clamp01(est.r_bmd / priors.h_joint);

    auto pooled = conditional_histogram(trace.bit, trace.llr, bins, llr_max);
    est.i_s_raw = mi_from_histogram(pooled, priors.p0_pooled) / priors.h_pooled;
    est.i_s = clamp01(est.i_s_raw);

    auto asym = asymmetric_histogram(trace.bit, trace.llr, bins, llr_max);
    est.i_a_raw = asi_from_histogram(asym);
    est.i_a = clamp01(est.i_a_raw);

    est.ngmi_raw = 1.0 - cond_entropy_sum / m;
    est.ngmi = clamp01(est.ngmi_raw);
    est.rc_max = 1.0 - (priors.h_joint - est.r_bmd) / m;

    return est;
}

namespace {

// Piecewise-linear interpolation of the metric value where log10(ber) crosses
// the target, scanning segments in ascending metric order.
bool metric_at_target_ber(const MetricCurve& curve, double target, double* out) {
    std::vector<std::pair<double, double>> pts;
    for (auto [x, ber] : curve.points) {
        if (ber > 0.0) pts.emplace_back(x, ber);
    }
    std::sort(pts.begin(), pts.end());
    double lt = std::log10(target);
    for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
        double la = std::log10(pts[j].second);
        double lb = std::log10(pts[j + 1].second);
        if ((la - lt) * (lb - lt) <= 0.0) {
            double frac = (la == lb) ? 0.0 : (lt - la) / (lb - la);
            *out = pts[j].first + frac * (pts[j + 1].first - pts[j].first);
            return true;
        }
    }
    return false;
}

// log10(ber) at a metric value; edge segments extrapolate, result clamped to
// [1e-12, 0.5] so waterfall slopes cannot run away.
double ber_at_metric(const MetricCurve& curve, double x) {
    std::vector<std::pair<double, double>> pts;
    for (auto [mx, ber] : curve.points) {
        if (ber > 0.0) pts.emplace_back(mx, ber);
    }
    std::sort(pts.begin(), pts.end());
    if (pts.size() == 1) return std::clamp(pts[0].second, 1e-12, 0.5);
    std::size_t seg = 0;
    while (seg + 2 < pts.size() && pts[seg + 1].first < x) ++seg;
    double x0 = pts[seg].first, x1 = pts[seg + 1].first;
    double l0 = std::log10(pts[seg].second), l1 = std::log10(pts[seg + 1].second);
    double frac = (x1 == x0) ? 0.0 : (x - x0) / (x1 - x0);
    return std::clamp(std::pow(10.0, l0 + frac * (l1 - l0)), 1e-12, 0.5);
}

}  // namespace

AccuracyResult accuracy_analysis(std::span<const MetricCurve> curves, double target_ber) {
    if (!(target_ber > 0.0 && target_ber < 1.0))
        throw ConfigError("target BER must lie in (0, 1)");
    AccuracyResult res;
    for (const auto& curve : curves) {
        double x;
        if (curve.points.empty() || !metric_at_target_ber(curve, target_ber, &x)) {
            res.excluded.push_back(curve.label);
            continue;
        }
        res.metric_at_target.emplace_back(curve.label, x);
    }
    if (res.metric_at_target.empty()) throw DataError("no curve brackets the target BER");

    double lo = res.metric_at_target[0].second, hi = lo, sum = 0.0;
    for (auto& [label, x] : res.metric_at_target) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
        sum += x;
    }
    res.delta_metric = hi - lo;
    res.mean_metric = sum / static_cast<double>(res.metric_at_target.size());

    double ber_lo = 1.0, ber_hi = 0.0;
    for (const auto& curve : curves) {
        bool excluded = false;
        for (const auto& label : res.excluded) excluded = excluded || label == curve.label;
        if (excluded) continue;
        double b = ber_at_metric(curve, res.mean_metric);
        ber_lo = std::min(ber_lo, b);
        ber_hi = std::max(ber_hi, b);
    }
    res.delta_ber = ber_hi / ber_lo;
    return res;
}

}  // namespace pasim
