#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pasim {

// Systematic IRA-style LDPC code built from an address table. The table lists,
// per group of info bits, the parity addresses of the group's first bit; bit t
// of a group uses (x + t*q) mod (n-k). Parity forms an accumulator chain, so
// encoding is a sparse XOR pass plus a running XOR.
//
// File format: header line "n k", then one line of decimal addresses per info
// bit group. The group size is k / number_of_lines.
struct LdpcCode {
    int n = 0;
    int k = 0;
    int group = 0;  // info bits per table line
    int q = 0;      // (n - k) / group
    std::vector<std::vector<int>> group_addresses;

    // decoder graph, CSR over checks; variables 0..k-1 info, k..n-1 parity
    std::vector<int> chk_ptr;
    std::vector<int> chk_var;
    std::vector<int> var_ptr;
    std::vector<int> var_edge;  // edge ids (indices into chk_var) per variable

    int num_checks() const { return n - k; }
    int num_edges() const { return static_cast<int>(chk_var.size()); }
    double rate() const { return static_cast<double>(k) / n; }
};

LdpcCode parse_code(const std::string& text);
LdpcCode load_code(const std::string& path);

std::vector<std::uint8_t> encode(const LdpcCode& code, std::span<const std::uint8_t> info);
bool check_parity(const LdpcCode& code, std::span<const std::uint8_t> bits);

struct DecodeResult {
    std::vector<std::uint8_t> bits;  // hard decisions, length n
    int iterations = 0;
    bool parity_ok = false;
};

struct DecodeWorkspace {
    std::vector<double> v2c, c2v, posterior, fwd, bwd;
    std::vector<std::uint8_t> hard;
};

// Flooding sum-product on LLRs (positive means bit 0), exact pairwise boxplus
// check updates, early stop once all checks are satisfied by the current hard
// decisions. A zero posterior counts as unresolved, so an all-zero input never
// reports success.
DecodeResult decode(const LdpcCode& code, std::span<const double> llr, int max_iter,
                    DecodeWorkspace& ws);
DecodeResult decode(const LdpcCode& code, std::span<const double> llr, int max_iter = 20);

}  // namespace pasim
