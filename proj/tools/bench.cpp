// Throughput comparison of the serial reference kernels against the
// OpenMP-parallel versions: block demapping and batched codeword decoding.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pasim/channel.hpp"
#include "pasim/constellation.hpp"
#include "pasim/demapper.hpp"
#include "pasim/fec.hpp"
#include "pasim/framing.hpp"
#include "pasim/rng.hpp"

using Clock = std::chrono::steady_clock;

static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    std::string table = "data/ldpc/ira64800_r23.txt";
    int symbols = 2'000'000;
    int codewords = 8;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--table") && i + 1 < argc)
            table = argv[++i];
        else if (!std::strcmp(argv[i], "--symbols") && i + 1 < argc)
            symbols = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--codewords") && i + 1 < argc)
            codewords = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: %s [--table FILE] [--symbols N] [--codewords N]\n",
                         argv[0]);
            return 2;
        }
    }

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled\n");
#endif

    auto c = pasim::build_gray_pam(3, pasim::default_mapper(3));
    auto d = pasim::maxwell_boltzmann_for_entropy(c, 2.803);
    pasim::Demapper demapper(c, d);

    // demap benchmark
    {
        pasim::Rng rng(7);
        std::vector<double> y(symbols);
        for (auto& v : y) v = 2.0 * rng.next_unit() - 1.0;
        std::vector<double> out(static_cast<std::size_t>(symbols) * 3);

        auto t0 = Clock::now();
        demapper.demap_block_serial(y, 0.2, 50.0, out);
        double serial = seconds_since(t0);

        t0 = Clock::now();
        demapper.demap_block(y, 0.2, 50.0, out);
        double parallel = seconds_since(t0);

        std::printf("demap   %9d symbols   serial %7.3fs (%6.2f Msym/s)   omp %7.3fs "
                    "(%6.2f Msym/s)   speedup %.2fx\n",
                    symbols, serial, symbols / serial / 1e6, parallel,
                    symbols / parallel / 1e6, serial / parallel);
    }

    // decode benchmark: noisy codewords near the waterfall keep the decoder busy
    {
        auto code = pasim::load_code(table);
        auto frame = pasim::build_frame(code, c);
        pasim::Rng rng(11);
        std::vector<std::vector<double>> llrs(codewords);
        auto pmf = pasim::amplitude_pmf(c, d);
        std::vector<double> cdf(pmf.size());
        double acc = 0.0;
        for (std::size_t a = 0; a < pmf.size(); ++a) cdf[a] = (acc += pmf[a]);
        for (int cw = 0; cw < codewords; ++cw) {
            std::vector<int> amps(frame.n_sym);
            for (auto& a : amps) {
                double u = rng.next_unit();
                int idx = 0;
                while (cdf[idx] < u) ++idx;
                a = idx;
            }
            std::vector<std::uint8_t> uni(frame.n_uniform);
            for (auto& b : uni) b = static_cast<std::uint8_t>(rng.next_bit());
            auto tx = pasim::assemble_tx(frame, c, code, amps, uni);
            std::vector<double> x(frame.n_sym);
            double scale = demapper.scale();
            for (int s = 0; s < frame.n_sym; ++s) x[s] = scale * c.points[tx.symbols[s]];
            auto y = pasim::transmit(x, pasim::sigma_for_snr_db(9.0), rng.next_u64());
            std::vector<double> l(static_cast<std::size_t>(frame.n_sym) * 3);
            demapper.demap_block_serial(y, pasim::sigma_for_snr_db(9.0), 50.0, l);
            llrs[cw].resize(code.n);
            for (int s = 0; s < frame.n_sym; ++s)
                for (int i = 0; i < 3; ++i)
                    llrs[cw][frame.bit_position(c.label_index(i), s)] = l[s * 3 + i];
        }

        auto t0 = Clock::now();
        for (int cw = 0; cw < codewords; ++cw) pasim::decode(code, llrs[cw], 20);
        double serial = seconds_since(t0);

        t0 = Clock::now();
#pragma omp parallel for schedule(dynamic)
        for (int cw = 0; cw < codewords; ++cw) pasim::decode(code, llrs[cw], 20);
        double parallel = seconds_since(t0);

        std::printf("decode  %9d codewords serial %7.3fs (%6.2f cw/s)     omp %7.3fs "
                    "(%6.2f cw/s)     speedup %.2fx\n",
                    codewords, serial, codewords / serial, parallel,
                    codewords / parallel, serial / parallel);
    }
    return 0;
}
