#include "pasim/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "pasim/errors.hpp"

namespace pasim {

double entropy_bits(std::span<const double> p) {
    double h = 0.0;
    for (double v : p) {
        if (v > 0.0) h -= v * std::log2(v);
    }
    return h;
}

double binary_entropy(double p0) {
    if (p0 <= 0.0 || p0 >= 1.0) return 0.0;
    return -p0 * std::log2(p0) - (1.0 - p0) * std::log2(1.0 - p0);
}

std::vector<int> default_mapper(int m) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = m - i;
    return v;
}

int Constellation::point_from_label(std::span<const std::uint8_t> bits) const {
    int packed = 0;
    for (int j = 0; j < m; ++j) packed = (packed << 1) | (bits[j] & 1);
    return label_to_point[packed];
}

int Constellation::amplitude_of(int point) const {
    double x = points[point];
    return static_cast<int>((std::abs(x) - 1.0) / 2.0 + 0.5);
}

void Constellation::amplitude_label_bits(int amp, std::span<std::uint8_t> out) const {
    int point = (1 << (m - 1)) + amp;  // the positive point with |x| = 2*amp+1
    for (int j = 1; j < m; ++j) out[j - 1] = labels[point * m + j];
}

Constellation build_gray_pam(int m, std::span<const int> mapper) {
    if (m < 1 || m > 8) throw ConfigError("bits per symbol must be in 1..8");
    if (static_cast<int>(mapper.size()) != m)
        throw ConfigError("mapper size must equal bits per symbol");
    std::vector<bool> seen(m + 1, false);
    for (int v : mapper) {
        if (v < 1 || v > m || seen[v]) throw ConfigError("mapper must be a permutation of 1..m");
        seen[v] = true;
    }

    Constellation c;
    c.m = m;
    c.mapper.assign(mapper.begin(), mapper.end());
    int np = 1 << m;
    c.points.resize(np);
    c.labels.resize(static_cast<std::size_t>(np) * m);
    c.label_to_point.assign(np, -1);
    for (int p = 0; p < np; ++p) {
        c.points[p] = 2.0 * p - (np - 1);
        unsigned g = static_cast<unsigned>(p) ^ (static_cast<unsigned>(p) >> 1);
        int packed = 0;
        for (int j = 0; j < m; ++j) {
            int bit = static_cast<int>((g >> (m - 1 - j)) & 1u);
            if (j == 0) bit ^= 1;  // sign bit: 0 on positive amplitudes
            c.labels[p * m + j] = static_cast<std::uint8_t>(bit);
            packed = (packed << 1) | bit;
        }
        c.label_to_point[packed] = p;
    }
    return c;
}

BitStats derive_bit_statistics(const Constellation& c, std::span<const double> probs) {
    BitStats s;
    s.p0_trib.assign(c.m, 0.0);
    s.h_trib.assign(c.m, 0.0);
    for (int p = 0; p < c.size(); ++p) {
        for (int i = 0; i < c.m; ++i) {
            if (c.tributary_bit(p, i) == 0) s.p0_trib[i] += probs[p];
        }
    }
    for (int i = 0; i < c.m; ++i) {
        s.h_trib[i] = binary_entropy(s.p0_trib[i]);
        s.p0_pooled += s.p0_trib[i];
    }
    s.p0_pooled /= c.m;
    s.h_pooled = binary_entropy(s.p0_pooled);
    s.h_joint = entropy_bits(probs);  // labels are distinct per point
    return s;
}

ShapedDistribution uniform_distribution(const Constellation& c) {
    ShapedDistribution d;
    d.probs.assign(c.size(), 1.0 / c.size());
    d.nu = 0.0;
    d.stats = derive_bit_statistics(c, d.probs);
    return d;
}

namespace {

std::vector<double> mb_probs(const Constellation& c, double nu) {
    std::vector<double> p(c.size());
    double z = 0.0;
    for (int i = 0; i < c.size(); ++i) {
        p[i] = std::exp(-nu * c.points[i] * c.points[i]);
        z += p[i];
    }
    for (double& v : p) v /= z;
    return p;
}

}  // namespace

ShapedDistribution maxwell_boltzmann_for_entropy(const Constellation& c,
                                                 double target_entropy_bits) {
    double m = static_cast<double>(c.m);
    if (target_entropy_bits > m + 1e-9 || target_entropy_bits < 1.0 - 1e-9)
        throw ConfigError("target entropy must lie in [1, m] bits");
    if (target_entropy_bits >= m - 1e-9 || c.m == 1) return uniform_distribution(c);

    auto entropy_at = [&](double nu) { return entropy_bits(mb_probs(c, nu)); };

    double lo = 0.0, hi = 1e-3;
    int guard = 0;
    while (entropy_at(hi) > target_entropy_bits) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 80) throw ConfigError("target entropy unreachable");
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (entropy_at(mid) > target_entropy_bits)
            lo = mid;
        else
            hi = mid;
    }

    ShapedDistribution d;
    d.nu = 0.5 * (lo + hi);
    d.probs = mb_probs(c, d.nu);
    d.stats = derive_bit_statistics(c, d.probs);
    return d;
}

double unit_energy_scale(const Constellation& c, const ShapedDistribution& d) {
    double e = 0.0;
    for (int p = 0; p < c.size(); ++p) e += d.probs[p] * c.points[p] * c.points[p];
    return 1.0 / std::sqrt(e);
}

std::vector<double> amplitude_pmf(const Constellation& c, const ShapedDistribution& d) {
    std::vector<double> pmf(c.num_amplitudes(), 0.0);
    for (int p = 0; p < c.size(); ++p) pmf[c.amplitude_of(p)] += d.probs[p];
    return pmf;
}

bool amplitude_symmetric(const Constellation& c, const ShapedDistribution& d, double tol) {
    int np = c.size();
    for (int p = 0; p < np / 2; ++p) {
        if (std::abs(d.probs[p] - d.probs[np - 1 - p]) > tol) return false;
    }
    return true;
}

std::string format_distribution(const ShapedDistribution& d) {
    std::string out;
    char buf[64];
    for (double p : d.probs) {
        std::snprintf(buf, sizeof buf, "%.17g\n", p);
        out += buf;
    }
    return out;
}

ShapedDistribution parse_distribution(const Constellation& c, const std::string& text) {
    std::istringstream in(text);
    std::vector<double> probs;
    double v;
    while (in >> v) probs.push_back(v);
    if (static_cast<int>(probs.size()) != c.size())
        throw DataError("distribution must list exactly 2^m probabilities");
    double sum = 0.0;
    for (double p : probs) {
        if (p < 0.0) throw DataError("distribution probabilities must be nonnegative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-6) throw DataError("distribution probabilities must sum to 1");
    for (double& p : probs) p /= sum;

    ShapedDistribution d;
    d.probs = std::move(probs);
    d.nu = 0.0;
    d.stats = derive_bit_statistics(c, d.probs);
    return d;
}

}  // namespace pasim
