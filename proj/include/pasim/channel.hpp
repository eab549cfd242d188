#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pasim {

// Real AWGN channel. SNR is defined per real dimension as E[X^2]/sigma^2 with
// unit-energy input, so sigma^2 = 10^(-snr_db/10). snr_db = +infinity is the
// noiseless sentinel (sigma = 0).
struct ChannelConfig {
    double snr_db = 0.0;
    std::uint64_t seed = 0;
};

double sigma_for_snr_db(double snr_db);

std::vector<double> transmit(std::span<const double> x, double sigma,
                             std::uint64_t stream_seed);
std::vector<double> transmit(std::span<const double> x, const ChannelConfig& cfg);

}  // namespace pasim
