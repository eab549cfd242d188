#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "pasim/errors.hpp"
#include "pasim/fec.hpp"
#include "pasim/rng.hpp"

using namespace pasim;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string toy_path() { return std::string(PASIM_DATA_DIR) + "/ldpc/toy12.txt"; }
std::string r23_path() { return std::string(PASIM_DATA_DIR) + "/ldpc/ira64800_r23.txt"; }
std::string r56_path() { return std::string(PASIM_DATA_DIR) + "/ldpc/ira64800_r56.txt"; }

std::vector<double> to_llrs(const std::vector<std::uint8_t>& bits, double mag) {
    std::vector<double> llr(bits.size());
    for (std::size_t j = 0; j < bits.size(); ++j) llr[j] = bits[j] ? -mag : mag;
    return llr;
}

}  // namespace

TEST_SUITE("fec") {

TEST_CASE("toy code: encoder output satisfies H*c = 0 for the dense-matrix oracle") {
    auto code = load_code(toy_path());
    auto text = read_file(toy_path());
    CHECK(code.n == 12);
    CHECK(code.k == 6);
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::uint8_t> info(code.k);
        for (auto& b : info) b = static_cast<std::uint8_t>(rng.next_bit());
        auto cw = encode(code, info);
        // systematic
        for (int j = 0; j < code.k; ++j) REQUIRE(cw[j] == info[j]);
        REQUIRE(oracles::dense_parity_ok(text, cw));
        REQUIRE(check_parity(code, cw));
    }
}

TEST_CASE("toy code: unit vectors encode to valid codewords") {
    auto code = load_code(toy_path());
    auto text = read_file(toy_path());
    for (int u = 0; u < code.k; ++u) {
        std::vector<std::uint8_t> info(code.k, 0);
        info[u] = 1;
        CHECK(oracles::dense_parity_ok(text, encode(code, info)));
    }
}

TEST_CASE("all-zero info encodes to the all-zero codeword") {
    auto code = load_code(toy_path());
    auto cw = encode(code, std::vector<std::uint8_t>(code.k, 0));
    CHECK(cw == std::vector<std::uint8_t>(code.n, 0));
}

TEST_CASE("64800-bit r2/3 table loads with the expected dimensions") {
    auto code = load_code(r23_path());
    CHECK(code.n == 64800);
    CHECK(code.k == 43200);
    CHECK(code.group == 360);
    CHECK(code.q == 60);
}

TEST_CASE("r5/6 parity length is 10800") {
    auto code = load_code(r56_path());
    CHECK(code.n - code.k == 10800);
    Rng rng(5);
    std::vector<std::uint8_t> info(code.k);
    for (auto& b : info) b = static_cast<std::uint8_t>(rng.next_bit());
    CHECK(check_parity(code, encode(code, info)));
}

TEST_CASE("malformed tables are load errors") {
    CHECK_THROWS_AS(parse_code(""), DataError);
    CHECK_THROWS_AS(parse_code("12\n0 1\n"), DataError);
    CHECK_THROWS_AS(parse_code("12 6\n0 6\n1 2\n2 3\n3 4\n4 5\n5 0\n"), DataError);  // addr = n-k
    CHECK_THROWS_AS(parse_code("12 6\n0 1\n1 2\n2 3\n3 4\n"), DataError);  // rows do not divide k
    CHECK_THROWS_AS(parse_code("12 6\n0 x\n1 2\n2 3\n3 4\n4 5\n5 0\n"), DataError);
}

TEST_CASE("noiseless decode returns the codeword after one iteration") {
    auto code = load_code(toy_path());
    Rng rng(7);
    std::vector<std::uint8_t> info(code.k);
    for (auto& b : info) b = static_cast<std::uint8_t>(rng.next_bit());
    auto cw = encode(code, info);
    auto res = decode(code, to_llrs(cw, 50.0), 20);
    CHECK(res.parity_ok);
    CHECK(res.iterations == 1);
    CHECK(res.bits == cw);
}

TEST_CASE("single flipped LLR is corrected at every position") {
    auto code = load_code(toy_path());
    Rng rng(11);
    std::vector<std::uint8_t> info(code.k);
    for (auto& b : info) b = static_cast<std::uint8_t>(rng.next_bit());
    auto cw = encode(code, info);

    SUBCASE("flip weaker than its neighbors, every position") {
        for (int flip = 0; flip < code.n; ++flip) {
            auto llr = to_llrs(cw, 50.0);
            llr[flip] = cw[flip] ? 10.0 : -10.0;
            auto res = decode(code, llr, 20);
            REQUIRE(res.parity_ok);
            REQUIRE(res.bits == cw);
        }
    }
    SUBCASE("equal-magnitude flip, positions with column weight >= 2") {
        // the accumulator's final parity bit has a single check; an equally
        // confident contradiction there is unresolvable by design
        for (int flip = 0; flip < code.n - 1; ++flip) {
            auto llr = to_llrs(cw, 50.0);
            llr[flip] = -llr[flip];
            auto res = decode(code, llr, 20);
            REQUIRE(res.parity_ok);
            REQUIRE(res.bits == cw);
        }
    }
}

TEST_CASE("all-zero LLRs never report success") {
    auto code = load_code(toy_path());
    auto res = decode(code, std::vector<double>(code.n, 0.0), 20);
    CHECK_FALSE(res.parity_ok);
    CHECK(res.iterations == 20);
}

TEST_CASE("strong LLRs of any codeword decode back to it") {
    auto code = load_code(toy_path());
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint8_t> info(code.k);
        for (auto& b : info) b = static_cast<std::uint8_t>(rng.next_bit());
        auto cw = encode(code, info);
        auto res = decode(code, to_llrs(cw, 30.0), 20);
        REQUIRE(res.parity_ok);
        REQUIRE(res.bits == cw);
    }
}

TEST_CASE("linear-code symmetry: all-zero and random codewords see the same BER") {
    auto code = load_code(toy_path());
    const double sigma = 0.8;
    const int trials = 4000;
    Rng rng(17);

    auto run = [&](const std::vector<std::uint8_t>& cw) {
        long errors = 0;
        for (int t = 0; t < trials; ++t) {
            std::vector<double> llr(code.n);
            for (int j = 0; j < code.n; ++j) {
                double x = cw[j] ? -1.0 : 1.0;
                double y = x + sigma * rng.next_gaussian();
                llr[j] = 2.0 * y / (sigma * sigma);
            }
            auto res = decode(code, llr, 20);
            for (int j = 0; j < code.n; ++j) errors += res.bits[j] != cw[j];
        }
        return static_cast<double>(errors) / (static_cast<double>(trials) * code.n);
    };

    double ber_zero = run(std::vector<std::uint8_t>(code.n, 0));
    std::vector<std::uint8_t> info(code.k);
    for (auto& b : info) b = static_cast<std::uint8_t>(rng.next_bit());
    double ber_fixed = run(encode(code, info));

    // decoded bits are correlated inside a codeword, so the codeword count is
    // the effective sample size
    double p = 0.5 * (ber_zero + ber_fixed);
    double sd = std::sqrt(std::max(p * (1 - p) / trials, 1e-12));
    CHECK(std::abs(ber_zero - ber_fixed) < 3.0 * sd * std::sqrt(2.0) + 1e-9);
}

}  // TEST_SUITE
