#include "pasim/shaping.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pasim/constellation.hpp"
#include "pasim/errors.hpp"

namespace pasim {

CcdmConfig ccdm_config(std::vector<int> composition) {
    CcdmConfig cfg;
    cfg.composition = std::move(composition);
    cfg.ns = std::accumulate(cfg.composition.begin(), cfg.composition.end(), 0);
    for (int c : cfg.composition) {
        if (c < 0) throw ConfigError("composition counts must be nonnegative");
    }
    if (cfg.ns < 1) throw ConfigError("composition must cover at least one symbol");
    cfg.total = multinomial(cfg.composition);
    cfg.k = static_cast<int>(cfg.total.bit_length()) - 1;  // floor(log2 total)
    return cfg;
}

CcdmConfig composition_for(std::span<const double> pmf, int ns) {
    if (ns < 1) throw ConfigError("block length must be at least 1");
    std::vector<int> counts(pmf.size());
    std::vector<std::pair<double, int>> remainders(pmf.size());
    int assigned = 0;
    for (std::size_t a = 0; a < pmf.size(); ++a) {
        double exact = pmf[a] * ns;
        counts[a] = static_cast<int>(std::floor(exact));
        assigned += counts[a];
        remainders[a] = {exact - counts[a], static_cast<int>(a)};
    }
    std::sort(remainders.begin(), remainders.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
    });
    for (int r = 0; r < ns - assigned; ++r) counts[remainders[r].second] += 1;
    return ccdm_config(std::move(counts));
}

std::vector<int> ccdm_encode(const CcdmConfig& cfg, std::span<const std::uint8_t> bits) {
    if (static_cast<int>(bits.size()) != cfg.k)
        throw DataError("ccdm input must be exactly k bits");
    BigUint index = BigUint::from_bits(bits);

    std::vector<int> counts = cfg.composition;
    BigUint span = cfg.total;
    std::vector<int> out;
    out.reserve(cfg.ns);
    for (int remaining = cfg.ns; remaining > 0; --remaining) {
        for (std::size_t a = 0; a < counts.size(); ++a) {
            if (counts[a] == 0) continue;
            // Sequences starting with amplitude a occupy span * counts[a] /
            // remaining positions; the division is exact.
            BigUint sub = span;
            sub.mul_u32(static_cast<std::uint32_t>(counts[a]));
            sub.div_u32(static_cast<std::uint32_t>(remaining));
            if (index < sub) {
                out.push_back(static_cast<int>(a));
                counts[a] -= 1;
                span = std::move(sub);
                break;
            }
            index -= sub;
        }
    }
    return out;
}

std::vector<std::uint8_t> ccdm_decode(const CcdmConfig& cfg, std::span<const int> block) {
    if (static_cast<int>(block.size()) != cfg.ns)
        throw DataError("ccdm block must be exactly ns symbols");
    std::vector<int> seen(cfg.composition.size(), 0);
    for (int a : block) {
        if (a < 0 || a >= static_cast<int>(cfg.composition.size()))
            throw DataError("ccdm block contains an out-of-range amplitude");
        seen[a] += 1;
    }
    if (seen != cfg.composition)
        throw DataError("ccdm block composition does not match the configuration");

    std::vector<int> counts = cfg.composition;
    BigUint span = cfg.total;
    BigUint index;
    for (int pos = 0; pos < cfg.ns; ++pos) {
        int remaining = cfg.ns - pos;
        int chosen = block[pos];
        for (int a = 0; a < chosen; ++a) {
            if (counts[a] == 0) continue;
            BigUint sub = span;
            sub.mul_u32(static_cast<std::uint32_t>(counts[a]));
            sub.div_u32(static_cast<std::uint32_t>(remaining));
            index += sub;
        }
        span.mul_u32(static_cast<std::uint32_t>(counts[chosen]));
        span.div_u32(static_cast<std::uint32_t>(remaining));
        counts[chosen] -= 1;
    }
    if (static_cast<int>(index.bit_length()) > cfg.k)
        throw DataError("ccdm block is not in the matcher image");
    std::vector<std::uint8_t> bits(cfg.k);
    index.write_bits(bits);
    return bits;
}

double rate_loss(const CcdmConfig& cfg) {
    std::vector<double> pmf(cfg.composition.size());
    for (std::size_t a = 0; a < pmf.size(); ++a)
        pmf[a] = static_cast<double>(cfg.composition[a]) / cfg.ns;
    double h_amp = entropy_bits(pmf);
    double realized = static_cast<double>(cfg.k) / cfg.ns;
    return (h_amp - realized) / (1.0 + h_amp);
}

}  // namespace pasim
