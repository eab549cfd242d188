#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pasim/constellation.hpp"
#include "pasim/demapper.hpp"

namespace pasim {

// Histogram over LLR values with bin edges chosen as empirical quantiles of
// the magnitudes, mirrored to signed bins; the outermost bins absorb the tails
// up to +-llr_max. Edges are strictly increasing (duplicate quantiles are
// merged, so heavy clipping just reduces the effective bin count).
struct BinEdges {
    std::vector<double> folded;  // 0 = f0 < f1 < ... < L_max
    std::vector<double> signed_; // mirror of folded around 0

    int folded_bins() const { return static_cast<int>(folded.size()) - 1; }
    int signed_bins() const { return static_cast<int>(signed_.size()) - 1; }
    int folded_bin(double v) const;
    int signed_bin(double v) const;
};

BinEdges quantile_edges(std::span<const double> values, int bins, double llr_max);

// Conditional histogram of one LLR family given the bit value.
struct BitConditionalHistogram {
    BinEdges edges;
    std::vector<double> count0, count1;  // per signed bin
    double total0 = 0, total1 = 0;
};

// Histogram pair of the asymmetric LLR and its magnitude on shared edges.
struct AsymmetricHistogram {
    BinEdges edges;
    std::vector<double> signed_count;  // of (-1)^B * L
    std::vector<double> folded_count;  // of |(-1)^B * L|
    double total = 0;
};

BitConditionalHistogram conditional_histogram(std::span<const std::uint8_t> bits,
                                              std::span<const double> llrs, int bins,
                                              double llr_max);
AsymmetricHistogram asymmetric_histogram(std::span<const std::uint8_t> bits,
                                         std::span<const double> llrs, int bins,
                                         double llr_max);

// Discretized differential entropy in bits: sum of -p log2(p / width).
double differential_entropy_bits(std::span<const double> probs,
                                 std::span<const double> widths);

// Mutual information in bits of (B, quantized L); the bit prior is analytic,
// the conditionals are empirical.
double mi_from_histogram(const BitConditionalHistogram& h, double prior0);

// Asymmetric information 1 + h(|La|) - h(La), clamped to [0, 1].
double asi_from_histogram(const AsymmetricHistogram& h);

double ber_pre(const LlrTrace& trace);  // sign errors; L = 0 counts half
double ber_post(std::span<const std::uint8_t> sent, std::span<const std::uint8_t> decoded);

// Monte Carlo information estimate 1 - mean log2(1 + exp(-(-1)^B L)).
double mc_air_estimate(const LlrTrace& trace);

struct MetricEstimates {
    double ber_pre = 0;
    double i_mc = 0, i_mc_raw = 0;
    double i_n = 0, i_n_raw = 0;
    double i_s = 0, i_s_raw = 0;
    double i_a = 0, i_a_raw = 0;
    double ngmi = 0, ngmi_raw = 0;
    double rc_max = 0;
    double r_bmd = 0;
    std::vector<double> mi_trib;
    double emp_h_pooled = 0;  // diagnostic, from empirical bit frequencies
    std::size_t samples = 0;
};

MetricEstimates estimate_metrics(const LlrTrace& trace, const BitStats& priors,
                                 int bins = 32, double llr_max = 50.0);

// Prediction-accuracy comparison across formats at a target post-FEC BER.
struct MetricCurve {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (metric value, ber_post)
};

struct AccuracyResult {
    double delta_metric = 0;                    // peak-to-peak metric at target BER
    double delta_ber = 1;                       // max/min BER at the mean metric
    double mean_metric = 0;
    std::vector<std::pair<std::string, double>> metric_at_target;
    std::vector<std::string> excluded;          // formats that do not bracket the target
};

AccuracyResult accuracy_analysis(std::span<const MetricCurve> curves, double target_ber);

}  // namespace pasim
