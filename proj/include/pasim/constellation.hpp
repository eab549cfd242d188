#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pasim {

double entropy_bits(std::span<const double> p);
double binary_entropy(double p0);

// Per-tributary and pooled bit statistics derived from a symbol distribution.
struct BitStats {
    std::vector<double> p0_trib;  // P_{B_i}(0), tributary order
    std::vector<double> h_trib;   // H(B_i) in bits
    double p0_pooled = 0.0;       // P_B(0) = average of the tributary priors
    double h_pooled = 0.0;        // H(B)
    double h_joint = 0.0;         // entropy of the full m-bit label
};

// Gray-labeled 2^m-PAM. Points are the odd integers -(2^m-1) .. +(2^m-1);
// energy normalization is a separate scale factor because it depends on the
// active symbol distribution. Label bit 0 is the sign bit, chosen so that bit
// value 0 sits on positive amplitudes, and the remaining bits depend only on
// |x| (reflected Gray construction).
struct Constellation {
    int m = 0;
    std::vector<double> points;
    std::vector<std::uint8_t> labels;     // labels[p * m + j], j = 0 is the sign bit
    std::vector<int> mapper;              // tributary i carries the label bit of significance mapper[i]; sign has significance m
    std::vector<int> label_to_point;      // packed label value -> point index

    int size() const { return 1 << m; }
    int label_bit(int point, int idx) const { return labels[point * m + idx]; }
    int label_index(int trib) const { return m - mapper[trib]; }
    int tributary_bit(int point, int trib) const {
        return label_bit(point, label_index(trib));
    }
    int point_from_label(std::span<const std::uint8_t> bits) const;
    int num_amplitudes() const { return 1 << (m - 1); }
    int amplitude_of(int point) const;                              // 0-based, ascending |x|
    void amplitude_label_bits(int amp, std::span<std::uint8_t> out) const;  // label bits 1..m-1
};

std::vector<int> default_mapper(int m);  // (m, m-1, ..., 1): tributary 1 is the sign bit
Constellation build_gray_pam(int m, std::span<const int> mapper);

struct ShapedDistribution {
    std::vector<double> probs;  // over constellation points, sums to 1
    double nu = 0.0;            // Maxwell-Boltzmann parameter; 0 for uniform
    BitStats stats;
};

BitStats derive_bit_statistics(const Constellation& c, std::span<const double> probs);

ShapedDistribution uniform_distribution(const Constellation& c);

// Solves P(x) proportional to exp(-nu x^2) such that the label entropy matches
// the target within 1e-6 bits (bisection; nu = 0 reproduces uniform).
ShapedDistribution maxwell_boltzmann_for_entropy(const Constellation& c,
                                                 double target_entropy_bits);

double unit_energy_scale(const Constellation& c, const ShapedDistribution& d);
std::vector<double> amplitude_pmf(const Constellation& c, const ShapedDistribution& d);
bool amplitude_symmetric(const Constellation& c, const ShapedDistribution& d,
                         double tol = 1e-9);

// Plain-text exchange format: one probability per line, ascending amplitude.
std::string format_distribution(const ShapedDistribution& d);
ShapedDistribution parse_distribution(const Constellation& c, const std::string& text);

}  // namespace pasim
