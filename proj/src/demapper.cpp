#include "pasim/demapper.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "pasim/errors.hpp"

namespace pasim {

Demapper::Demapper(const Constellation& c, const ShapedDistribution& d) : m_(c.m) {
    scale_ = unit_energy_scale(c, d);
    int np = c.size();
    scaled_points_.resize(np);
    log_prior_.resize(np);
    active_.resize(np);
    trib_bit_.resize(static_cast<std::size_t>(np) * m_);
    for (int p = 0; p < np; ++p) {
        scaled_points_[p] = scale_ * c.points[p];
        active_[p] = d.probs[p] > 0.0;
        log_prior_[p] = active_[p] ? std::log(d.probs[p]) : 0.0;
        for (int i = 0; i < m_; ++i)
            trib_bit_[p * m_ + i] = static_cast<std::uint8_t>(c.tributary_bit(p, i));
    }
}

void Demapper::demap_symbol(double y, double sigma, double llr_max,
                            std::span<double> out) const {
    if (!(sigma > 0.0)) throw ConfigError("demapper needs sigma > 0");
    const int np = static_cast<int>(scaled_points_.size());
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);

    double score[256];
    for (int p = 0; p < np; ++p) {
        double dy = y - scaled_points_[p];
        score[p] = log_prior_[p] - dy * dy * inv2s2;
    }

    for (int i = 0; i < m_; ++i) {
        double max0 = -std::numeric_limits<double>::infinity();
        double max1 = max0;
        for (int p = 0; p < np; ++p) {
            if (!active_[p]) continue;
            double& mx = trib_bit_[p * m_ + i] ? max1 : max0;
            if (score[p] > mx) mx = score[p];
        }
        double llr;
        if (std::isinf(max0)) {
            llr = -llr_max;
        } else if (std::isinf(max1)) {
            llr = llr_max;
        } else {
            double sum0 = 0.0, sum1 = 0.0;
            for (int p = 0; p < np; ++p) {
                if (!active_[p]) continue;
                if (trib_bit_[p * m_ + i])
                    sum1 += std::exp(score[p] - max1);
                else
                    sum0 += std::exp(score[p] - max0);
            }
            llr = (max0 + std::log(sum0)) - (max1 + std::log(sum1));
            llr = std::clamp(llr, -llr_max, llr_max);
        }
        out[i] = llr;
    }
}

double Demapper::raw_llr(double y, double sigma, int trib) const {
    double out[8];
    demap_symbol(y, sigma, std::numeric_limits<double>::infinity(),
                 std::span<double>(out, m_));
    return out[trib];
}

void Demapper::demap_block_serial(std::span<const double> y, double sigma,
                                  double llr_max, std::span<double> out) const {
    for (std::size_t s = 0; s < y.size(); ++s)
        demap_symbol(y[s], sigma, llr_max, out.subspan(s * m_, m_));
}

void Demapper::demap_block(std::span<const double> y, double sigma, double llr_max,
                           std::span<double> out) const {
    const std::int64_t n = static_cast<std::int64_t>(y.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < n; ++s)
        demap_symbol(y[s], sigma, llr_max, out.subspan(s * m_, m_));
}

std::string trace_to_csv(const LlrTrace& trace) {
    std::string out = "i,B,L\n";
    char buf[64];
    for (std::size_t j = 0; j < trace.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", trace.trib[j] + 1,
                      static_cast<int>(trace.bit[j]), trace.llr[j]);
        out += buf;
    }
    return out;
}

LlrTrace trace_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw DataError("trace csv: empty input");
    LlrTrace trace;
    int max_trib = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        int i = 0, b = 0;
        double l = 0.0;
        if (std::sscanf(line.c_str(), "%d,%d,%lf", &i, &b, &l) != 3)
            throw DataError("trace csv: bad row: " + line);
        if (i < 1 || (b != 0 && b != 1)) throw DataError("trace csv: bad row: " + line);
        trace.trib.push_back(static_cast<std::uint8_t>(i - 1));
        trace.bit.push_back(static_cast<std::uint8_t>(b));
        trace.llr.push_back(l);
        max_trib = std::max(max_trib, i);
    }
    trace.m = max_trib;
    return trace;
}

}  // namespace pasim
