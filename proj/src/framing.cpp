#include "pasim/framing.hpp"

#include "pasim/errors.hpp"

namespace pasim {

CodewordFrame build_frame(const LdpcCode& code, const Constellation& c) {
    CodewordFrame f;
    f.n = code.n;
    f.k = code.k;
    f.m = c.m;
    if (f.m < 2) throw ConfigError("shaped framing needs at least 2 bits per symbol");
    if (f.n % f.m != 0) throw ConfigError("bits per symbol must divide the codeword length");
    f.n_sym = f.n / f.m;
    f.n_amp_bits = (f.m - 1) * f.n_sym;
    if (f.k < f.n_amp_bits)
        throw ConfigError("code rate below (m-1)/m: parity does not fit in the sign bits");
    f.n_uniform = f.k - f.n_amp_bits;
    f.n_parity = f.n - f.k;
    return f;
}

TxFrame assemble_tx(const CodewordFrame& frame, const Constellation& c,
                    const LdpcCode& code, std::span<const int> amplitudes,
                    std::span<const std::uint8_t> uniform_bits) {
    if (static_cast<int>(amplitudes.size()) != frame.n_sym)
        throw DataError("assemble_tx: need one amplitude per symbol slot");
    if (static_cast<int>(uniform_bits.size()) != frame.n_uniform)
        throw DataError("assemble_tx: uniform bit count does not match the frame");

    std::vector<std::uint8_t> info(frame.k);
    std::vector<std::uint8_t> amp_bits(frame.m - 1);
    for (int s = 0; s < frame.n_sym; ++s) {
        c.amplitude_label_bits(amplitudes[s], amp_bits);
        for (int j = 1; j < frame.m; ++j) info[frame.bit_position(j, s)] = amp_bits[j - 1];
    }
    for (int u = 0; u < frame.n_uniform; ++u) info[frame.n_amp_bits + u] = uniform_bits[u];

    TxFrame tx;
    tx.codeword = encode(code, info);
    tx.symbols.resize(frame.n_sym);
    std::vector<std::uint8_t> label(frame.m);
    for (int s = 0; s < frame.n_sym; ++s) {
        for (int j = 0; j < frame.m; ++j) label[j] = tx.codeword[frame.bit_position(j, s)];
        tx.symbols[s] = c.point_from_label(label);
    }
    return tx;
}

}  // namespace pasim
