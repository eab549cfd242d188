#include "pasim/channel.hpp"

#include <cmath>
#include <limits>

#include "pasim/rng.hpp"

namespace pasim {

double sigma_for_snr_db(double snr_db) {
    if (std::isinf(snr_db) && snr_db > 0.0) return 0.0;
    return std::sqrt(std::pow(10.0, -snr_db / 10.0));
}

std::vector<double> transmit(std::span<const double> x, double sigma,
                             std::uint64_t stream_seed) {
    std::vector<double> y(x.begin(), x.end());
    if (sigma > 0.0) {
        Rng rng(stream_seed);
        for (double& v : y) v += sigma * rng.next_gaussian();
    }
    return y;
}

std::vector<double> transmit(std::span<const double> x, const ChannelConfig& cfg) {
    return transmit(x, sigma_for_snr_db(cfg.snr_db), cfg.seed);
}

}  // namespace pasim
