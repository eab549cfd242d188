#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pasim/constellation.hpp"
#include "pasim/fec.hpp"

namespace pasim {

// Bit layout of one codeword in the shaped transmission chain. The info part
// is [all amplitude bits || uniform sign-info bits]; parity fills the rest and
// lands on sign positions, so the amplitude distribution survives encoding.
// Feasible only for R_c >= (m-1)/m.
struct CodewordFrame {
    int n = 0, k = 0, m = 0;
    int n_sym = 0;      // n / m
    int n_amp_bits = 0;  // (m-1) * n_sym
    int n_uniform = 0;   // k - n_amp_bits
    int n_parity = 0;    // n - k

    // label_idx 0 is the sign bit; 1..m-1 are amplitude bits
    int bit_position(int label_idx, int symbol) const {
        return label_idx == 0 ? n_amp_bits + symbol
                              : (m - 1) * symbol + (label_idx - 1);
    }
};

CodewordFrame build_frame(const LdpcCode& code, const Constellation& c);

struct TxFrame {
    std::vector<std::uint8_t> codeword;  // length n
    std::vector<int> symbols;            // constellation point per symbol slot
};

TxFrame assemble_tx(const CodewordFrame& frame, const Constellation& c,
                    const LdpcCode& code, std::span<const int> amplitudes,
                    std::span<const std::uint8_t> uniform_bits);

}  // namespace pasim
