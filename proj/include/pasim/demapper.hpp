#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pasim/constellation.hpp"

namespace pasim {

// Ensemble of (tributary, sent bit, LLR) samples, stored structure-of-arrays.
// The pooled view is the arrays themselves; the asymmetric value is
// (-1)^bit * llr, computed on demand.
struct LlrTrace {
    int m = 0;
    std::vector<std::uint8_t> trib;
    std::vector<std::uint8_t> bit;
    std::vector<double> llr;

    std::size_t size() const { return llr.size(); }
    void resize(std::size_t n) {
        trib.resize(n);
        bit.resize(n);
        llr.resize(n);
    }
    double asym(std::size_t i) const { return bit[i] ? -llr[i] : llr[i]; }
};

std::string trace_to_csv(const LlrTrace& trace);
LlrTrace trace_from_csv(const std::string& text);

// Exact a-posteriori LLR computation under a Gaussian channel assumption with
// the symbol priors of the active distribution. Output is in tributary order
// and natural-log units, clipped to +-llr_max (50 by default, far beyond the
// decoder's operating range).
class Demapper {
  public:
    Demapper(const Constellation& c, const ShapedDistribution& d);

    int m() const { return m_; }
    double scale() const { return scale_; }

    // out must hold m values
    void demap_symbol(double y, double sigma, double llr_max, std::span<double> out) const;
    double raw_llr(double y, double sigma, int trib) const;  // unclipped

    // out must hold m * y.size() values, symbol-major. The parallel version
    // writes each slot exactly once, so thread count cannot change the result.
    void demap_block_serial(std::span<const double> y, double sigma, double llr_max,
                            std::span<double> out) const;
    void demap_block(std::span<const double> y, double sigma, double llr_max,
                     std::span<double> out) const;

  private:
    int m_;
    double scale_;
    std::vector<double> scaled_points_;
    std::vector<double> log_prior_;      // natural log; -inf marked by skip flag
    std::vector<std::uint8_t> active_;   // prior > 0
    std::vector<std::uint8_t> trib_bit_; // trib_bit_[p * m + i]
};

}  // namespace pasim
