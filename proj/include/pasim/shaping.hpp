#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pasim/bigint.hpp"

namespace pasim {

// Constant-composition distribution matcher. Blocks of k uniform bits map
// injectively onto the lexicographically ordered amplitude sequences of a
// fixed composition, via exact big-integer interval subdivision.
struct CcdmConfig {
    int ns = 0;                    // output block length in amplitude symbols
    std::vector<int> composition;  // count per amplitude index, sums to ns
    int k = 0;                     // input bits per block = floor(log2 multinomial)
    BigUint total;                 // multinomial(ns; composition)
};

CcdmConfig ccdm_config(std::vector<int> composition);

// Largest-remainder rounding of ns * pmf; every count moves by less than 1.
CcdmConfig composition_for(std::span<const double> pmf, int ns);

std::vector<int> ccdm_encode(const CcdmConfig& cfg, std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> ccdm_decode(const CcdmConfig& cfg, std::span<const int> block);

// Fraction of the per-PAM-symbol information rate lost to finite-length
// matching, measured against the achieved composition: the sign bit carries
// one uniform bit, the amplitudes carry k/ns of an available H(composition/ns).
double rate_loss(const CcdmConfig& cfg);

}  // namespace pasim
