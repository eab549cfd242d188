// Test-only reference implementations, kept independent of the library paths
// they check: naive demapping by direct summation, dense parity-check
// multiplication straight from the table text, quadrature mutual information,
// and brute-force sequence enumeration.
#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pasim/constellation.hpp"

namespace oracles {

// LLR by direct summation in long double, no log-sum-exp.
inline long double naive_llr(const pasim::Constellation& c,
                             const pasim::ShapedDistribution& d, double scale, double y,
                             double sigma, int trib) {
    long double num = 0.0L, den = 0.0L;
    for (int p = 0; p < c.size(); ++p) {
        if (d.probs[p] <= 0.0) continue;
        long double dy = static_cast<long double>(y) - static_cast<long double>(scale) * c.points[p];
        long double w = static_cast<long double>(d.probs[p]) *
                        std::exp(-dy * dy / (2.0L * sigma * sigma));
        if (c.tributary_bit(p, trib) == 0)
            num += w;
        else
            den += w;
    }
    return std::log(num) - std::log(den);
}

// Dense H built directly from the address-table text: info addresses plus the
// accumulator chain. Returns H * c over GF(2).
inline bool dense_parity_ok(const std::string& table_text,
                            const std::vector<std::uint8_t>& codeword) {
    std::istringstream in(table_text);
    int n, k;
    in >> n >> k;
    std::string rest;
    std::getline(in, rest);
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> addrs;
        int a;
        while (ls >> a) addrs.push_back(a);
        if (!addrs.empty()) rows.push_back(addrs);
    }
    int group = k / static_cast<int>(rows.size());
    int nk = n - k;
    int q = nk / group;
    std::vector<std::vector<std::uint8_t>> H(nk, std::vector<std::uint8_t>(n, 0));
    for (std::size_t g = 0; g < rows.size(); ++g) {
        for (int t = 0; t < group; ++t) {
            for (int x : rows[g])
                H[(x + static_cast<long>(t) * q) % nk][g * group + t] ^= 1;
        }
    }
    for (int c = 0; c < nk; ++c) {
        H[c][k + c] ^= 1;
        if (c > 0) H[c][k + c - 1] ^= 1;
    }
    for (int c = 0; c < nk; ++c) {
        std::uint8_t sum = 0;
        for (int v = 0; v < n; ++v) sum ^= static_cast<std::uint8_t>(H[c][v] & codeword[v]);
        if (sum) return false;
    }
    return true;
}

// I(B;Y) for 2-PAM with P(X=+1)=p0 and bit 0 on +1, by Simpson integration.
inline double two_pam_mi_bits(double p0, double sigma) {
    auto gauss = [&](double y, double mu) {
        double d = (y - mu) / sigma;
        return std::exp(-0.5 * d * d) / (sigma * std::sqrt(2.0 * M_PI));
    };
    double lo = -1.0 - 10.0 * sigma, hi = 1.0 + 10.0 * sigma;
    int steps = 20000;  // even
    double hstep = (hi - lo) / steps;
    double h_y = 0.0;
    for (int j = 0; j <= steps; ++j) {
        double y = lo + j * hstep;
        double p = p0 * gauss(y, 1.0) + (1.0 - p0) * gauss(y, -1.0);
        double v = p > 0.0 ? -p * std::log2(p) : 0.0;
        double w = (j == 0 || j == steps) ? 1.0 : (j % 2 ? 4.0 : 2.0);
        h_y += w * v;
    }
    h_y *= hstep / 3.0;
    double h_y_given_b = 0.5 * std::log2(2.0 * M_PI * M_E * sigma * sigma);
    return h_y - h_y_given_b;
}

// All sequences of a given composition, lexicographic order.
inline void enumerate_compositions(std::vector<int> counts, std::vector<int>& prefix,
                                   const std::function<void(const std::vector<int>&)>& visit) {
    bool done = true;
    for (std::size_t a = 0; a < counts.size(); ++a) {
        if (counts[a] > 0) {
            done = false;
            counts[a] -= 1;
            prefix.push_back(static_cast<int>(a));
            enumerate_compositions(counts, prefix, visit);
            prefix.pop_back();
            counts[a] += 1;
        }
    }
    if (done) visit(prefix);
}

}  // namespace oracles
