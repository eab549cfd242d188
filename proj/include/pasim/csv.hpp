#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pasim {

// One row per simulated SNR point. Column order is part of the tool contract.
struct MetricReport {
    std::string label;
    double snr_db = 0;
    double ber_pre = 0;
    double ber_post = 0;  // NaN when no decoding was run
    double i_n = 0, i_s = 0, i_a = 0, ngmi = 0, i_mc = 0;
    double r_bmd = 0, rc_max = 0;
    double h_pooled = 0, h_joint = 0, sum_h_trib = 0;
    double i_n_raw = 0, i_s_raw = 0, i_a_raw = 0, ngmi_raw = 0, i_mc_raw = 0;
    double emp_h_pooled = 0;
    int codewords = 0;
    std::uint64_t samples = 0;
};

struct SweepResult {
    std::vector<MetricReport> rows;
    std::uint64_t config_hash = 0;
    std::uint64_t table_hash = 0;
    std::uint64_t seed = 0;
};

extern const char* const kReportColumns;  // header line without newline

std::string report_row_csv(const MetricReport& r);
std::string sweep_to_csv(const SweepResult& sweep);

// Accepts concatenated sweep CSVs; '#' lines are comments.
std::vector<MetricReport> parse_report_csv(const std::string& text);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace pasim
