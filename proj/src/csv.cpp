#include "pasim/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>

#include "pasim/errors.hpp"

namespace pasim {

const char* const kReportColumns =
    "label,snr_db,ber_pre,ber_post,i_n,i_s,i_a,ngmi,i_mc,r_bmd,rc_max,"
    "h_b,h_vec_b,sum_h_bi,i_n_raw,i_s_raw,i_a_raw,ngmi_raw,i_mc_raw,"
    "emp_h_b,codewords,samples";

std::string report_row_csv(const MetricReport& r) {
    char buf[768];
    std::snprintf(buf, sizeof buf,
                  "%s,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,"
                  "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%d,%llu",
                  r.label.c_str(), r.snr_db, r.ber_pre, r.ber_post, r.i_n, r.i_s, r.i_a,
                  r.ngmi, r.i_mc, r.r_bmd, r.rc_max, r.h_pooled, r.h_joint, r.sum_h_trib,
                  r.i_n_raw, r.i_s_raw, r.i_a_raw, r.ngmi_raw, r.i_mc_raw, r.emp_h_pooled,
                  r.codewords, static_cast<unsigned long long>(r.samples));
    return buf;
}

std::string sweep_to_csv(const SweepResult& sweep) {
    char head[256];
    std::snprintf(head, sizeof head,
                  "# pasim sweep v1\n# config_hash=%016llx\n# table_hash=%016llx\n# seed=%llu\n",
                  static_cast<unsigned long long>(sweep.config_hash),
                  static_cast<unsigned long long>(sweep.table_hash),
                  static_cast<unsigned long long>(sweep.seed));
    std::string out = head;
    out += kReportColumns;
    out += '\n';
    for (const auto& row : sweep.rows) {
        out += report_row_csv(row);
        out += '\n';
    }
    return out;
}

std::vector<MetricReport> parse_report_csv(const std::string& text) {
    std::istringstream in(text);
    std::vector<MetricReport> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("label,", 0) == 0) continue;  // header
        MetricReport r;
        std::size_t comma = line.find(',');
        if (comma == std::string::npos) throw DataError("report csv: bad row: " + line);
        r.label = line.substr(0, comma);
        unsigned long long samples = 0;
        int got = std::sscanf(line.c_str() + comma + 1,
                              "%lf,%lf,%lf,%lf,%lf,%lf,%lf,%lf,%lf,%lf,%lf,%lf,%lf,%lf,"
                              "%lf,%lf,%lf,%lf,%lf,%d,%llu",
                              &r.snr_db, &r.ber_pre, &r.ber_post, &r.i_n, &r.i_s, &r.i_a,
                              &r.ngmi, &r.i_mc, &r.r_bmd, &r.rc_max, &r.h_pooled,
                              &r.h_joint, &r.sum_h_trib, &r.i_n_raw, &r.i_s_raw,
                              &r.i_a_raw, &r.ngmi_raw, &r.i_mc_raw, &r.emp_h_pooled,
                              &r.codewords, &samples);
        if (got != 21) throw DataError("report csv: bad row: " + line);
        r.samples = samples;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace pasim
