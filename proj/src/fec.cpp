#include "pasim/fec.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "pasim/errors.hpp"

namespace pasim {

LdpcCode parse_code(const std::string& text) {
    std::istringstream in(text);
    LdpcCode code;
    std::string line;
    if (!std::getline(in, line)) throw DataError("ldpc table: empty file");
    {
        std::istringstream header(line);
        if (!(header >> code.n >> code.k)) throw DataError("ldpc table: bad header");
    }
    if (code.n <= 0 || code.k <= 0 || code.k >= code.n)
        throw DataError("ldpc table: need 0 < k < n");

    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::vector<int> addrs;
        int a;
        while (row >> a) addrs.push_back(a);
        if (!row.eof()) throw DataError("ldpc table: non-numeric address");
        if (!addrs.empty()) code.group_addresses.push_back(std::move(addrs));
    }
    if (code.group_addresses.empty()) throw DataError("ldpc table: no address rows");
    int rows = static_cast<int>(code.group_addresses.size());
    if (code.k % rows != 0) throw DataError("ldpc table: row count must divide k");
    code.group = code.k / rows;
    int nk = code.n - code.k;
    if (nk % code.group != 0)
        throw DataError("ldpc table: group size must divide the parity length");
    code.q = nk / code.group;
    for (const auto& row_addrs : code.group_addresses) {
        for (int addr : row_addrs) {
            if (addr < 0 || addr >= nk)
                throw DataError("ldpc table: address outside the parity range");
        }
    }

    // Build the check-node adjacency: info edges from the expanded table rows,
    // then the accumulator chain.
    std::vector<int> degree(nk, 0);
    for (int g = 0; g < rows; ++g) {
        for (int t = 0; t < code.group; ++t) {
            for (int x : code.group_addresses[g]) {
                degree[(x + static_cast<long>(t) * code.q) % nk] += 1;
            }
        }
    }
    for (int c = 0; c < nk; ++c) degree[c] += (c == 0) ? 1 : 2;

    code.chk_ptr.assign(nk + 1, 0);
    for (int c = 0; c < nk; ++c) code.chk_ptr[c + 1] = code.chk_ptr[c] + degree[c];
    code.chk_var.assign(code.chk_ptr[nk], 0);
    std::vector<int> fill = code.chk_ptr;
    for (int g = 0; g < rows; ++g) {
        for (int t = 0; t < code.group; ++t) {
            int v = g * code.group + t;
            for (int x : code.group_addresses[g]) {
                int c = static_cast<int>((x + static_cast<long>(t) * code.q) % nk);
                code.chk_var[fill[c]++] = v;
            }
        }
    }
    for (int c = 0; c < nk; ++c) {
        code.chk_var[fill[c]++] = code.k + c;
        if (c > 0) code.chk_var[fill[c]++] = code.k + c - 1;
    }

    // Transpose for the variable-node pass.
    std::vector<int> vdeg(code.n, 0);
    for (int v : code.chk_var) vdeg[v] += 1;
    code.var_ptr.assign(code.n + 1, 0);
    for (int v = 0; v < code.n; ++v) code.var_ptr[v + 1] = code.var_ptr[v] + vdeg[v];
    code.var_edge.assign(code.chk_var.size(), 0);
    std::vector<int> vfill = code.var_ptr;
    for (int e = 0; e < code.num_edges(); ++e) code.var_edge[vfill[code.chk_var[e]]++] = e;

    return code;
}

LdpcCode load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("ldpc table: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_code(buf.str());
}

std::vector<std::uint8_t> encode(const LdpcCode& code, std::span<const std::uint8_t> info) {
    if (static_cast<int>(info.size()) != code.k)
        throw DataError("ldpc encode: info length must equal k");
    int nk = code.n - code.k;
    std::vector<std::uint8_t> out(code.n, 0);
    std::copy(info.begin(), info.end(), out.begin());
    std::uint8_t* parity = out.data() + code.k;
    for (std::size_t g = 0; g < code.group_addresses.size(); ++g) {
        for (int t = 0; t < code.group; ++t) {
            std::uint8_t bit = info[g * code.group + t];
            if (!bit) continue;
            for (int x : code.group_addresses[g]) {
                parity[(x + static_cast<long>(t) * code.q) % nk] ^= 1;
            }
        }
    }
    for (int c = 1; c < nk; ++c) parity[c] ^= parity[c - 1];
    return out;
}

bool check_parity(const LdpcCode& code, std::span<const std::uint8_t> bits) {
    for (int c = 0; c < code.num_checks(); ++c) {
        std::uint8_t sum = 0;
        for (int e = code.chk_ptr[c]; e < code.chk_ptr[c + 1]; ++e) sum ^= bits[code.chk_var[e]];
        if (sum) return false;
    }
    return true;
}

namespace {

inline double boxplus(double a, double b) {
    double mag = std::min(std::abs(a), std::abs(b));
    double r = ((a < 0.0) == (b < 0.0)) ? mag : -mag;
    double s = std::abs(a + b);
    double d = std::abs(a - b);
    if (s < 40.0) r += std::log1p(std::exp(-s));
    if (d < 40.0) r -= std::log1p(std::exp(-d));
    return r;
}

}  // namespace

DecodeResult decode(const LdpcCode& code, std::span<const double> llr, int max_iter,
                    DecodeWorkspace& ws) {
    if (static_cast<int>(llr.size()) != code.n)
        throw DataError("ldpc decode: LLR length must equal n");
    if (max_iter < 1) throw ConfigError("ldpc decode: max_iter must be at least 1");
    const int ne = code.num_edges();
    const int nchk = code.num_checks();
    ws.v2c.resize(ne);
    ws.c2v.assign(ne, 0.0);
    ws.posterior.resize(code.n);
    ws.hard.resize(code.n);
    std::size_t max_deg = 0;
    for (int c = 0; c < nchk; ++c)
        max_deg = std::max<std::size_t>(max_deg, code.chk_ptr[c + 1] - code.chk_ptr[c]);
    ws.fwd.resize(max_deg);
    ws.bwd.resize(max_deg);

    for (int e = 0; e < ne; ++e) ws.v2c[e] = llr[code.chk_var[e]];

    DecodeResult res;
    res.bits.resize(code.n);
    for (int iter = 1; iter <= max_iter; ++iter) {
        // check-node pass
        for (int c = 0; c < nchk; ++c) {
            int base = code.chk_ptr[c];
            int deg = code.chk_ptr[c + 1] - base;
            if (deg == 1) {
                ws.c2v[base] = 1e3;  // degree-1 check pins its variable to 0
                continue;
            }
            ws.fwd[0] = ws.v2c[base];
            for (int j = 1; j < deg; ++j) ws.fwd[j] = boxplus(ws.fwd[j - 1], ws.v2c[base + j]);
            ws.bwd[deg - 1] = ws.v2c[base + deg - 1];
            for (int j = deg - 2; j >= 0; --j) ws.bwd[j] = boxplus(ws.bwd[j + 1], ws.v2c[base + j]);
            ws.c2v[base] = ws.bwd[1];
            ws.c2v[base + deg - 1] = ws.fwd[deg - 2];
            for (int j = 1; j < deg - 1; ++j)
                ws.c2v[base + j] = boxplus(ws.fwd[j - 1], ws.bwd[j + 1]);
        }
        // variable-node pass
        bool resolved = true;
        for (int v = 0; v < code.n; ++v) {
            double post = llr[v];
            for (int t = code.var_ptr[v]; t < code.var_ptr[v + 1]; ++t) post += ws.c2v[code.var_edge[t]];
            ws.posterior[v] = post;
            ws.hard[v] = post < 0.0 ? 1 : 0;
            if (post == 0.0) resolved = false;
            for (int t = code.var_ptr[v]; t < code.var_ptr[v + 1]; ++t) {
                int e = code.var_edge[t];
                ws.v2c[e] = post - ws.c2v[e];
            }
        }
        res.iterations = iter;
        if (resolved && check_parity(code, ws.hard)) {
            res.parity_ok = true;
            break;
        }
    }
    std::copy(ws.hard.begin(), ws.hard.end(), res.bits.begin());
    return res;
}

DecodeResult decode(const LdpcCode& code, std::span<const double> llr, int max_iter) {
    DecodeWorkspace ws;
    return decode(code, llr, max_iter, ws);
}

}  // namespace pasim
