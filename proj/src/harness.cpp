#include "pasim/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pasim/errors.hpp"
#include "pasim/rng.hpp"

namespace pasim {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::string config_fingerprint(const ExperimentConfig& cfg) {
    std::ostringstream out;
    out << "m=" << cfg.m << ";mapper=";
    for (int v : cfg.mapper) out << v << ",";
    out << ";dist=" << static_cast<int>(cfg.distribution.kind) << ":"
        << cfg.distribution.entropy << ":" << cfg.distribution.path
        << ";mode=" << static_cast<int>(cfg.mode) << ";ns=" << cfg.ns
        << ";table=" << cfg.table_path << ";max_iter=" << cfg.max_iter
        << ";snr=" << cfg.snr_start << ":" << cfg.snr_stop << ":" << cfg.snr_step
        << ";codewords=" << cfg.codewords << ";abort=" << cfg.early_abort
        << ";seed=" << cfg.seed << ";label=" << cfg.label
        << ";bins=" << cfg.hist_bins << ";llr_max=" << cfg.llr_max;
    return out.str();
}

Experiment::Experiment(const ExperimentConfig& cfg) : cfg_(cfg),
      constellation_(build_gray_pam(
          cfg.m, cfg.mapper.empty() ? default_mapper(cfg.m)
                                    : std::vector<int>(cfg.mapper))),
      dist_(uniform_distribution(constellation_)),
      code_(load_code(cfg.table_path)),
      frame_(build_frame(code_, constellation_)),
      demapper_(constellation_, dist_) {
    switch (cfg.distribution.kind) {
        case DistKind::Uniform:
            break;
        case DistKind::MaxwellBoltzmann:
            dist_ = maxwell_boltzmann_for_entropy(constellation_, cfg.distribution.entropy);
            break;
        case DistKind::File:
            dist_ = parse_distribution(constellation_, slurp(cfg.distribution.path));
            break;
    }
    if (!amplitude_symmetric(constellation_, dist_, 1e-9))
        throw ConfigError("shaped transmission needs an amplitude-symmetric distribution");
    demapper_ = Demapper(constellation_, dist_);

    auto pmf = amplitude_pmf(constellation_, dist_);
    if (cfg_.mode == ShapingMode::Ccdm) {
        ccdm_ = composition_for(pmf, cfg_.ns);
    } else {
        amp_cdf_.resize(pmf.size());
        double acc = 0.0;
        for (std::size_t a = 0; a < pmf.size(); ++a) {
            acc += pmf[a];
            amp_cdf_[a] = acc;
        }
        amp_cdf_.back() = 1.0;
    }

    table_hash_ = fnv1a64(slurp(cfg_.table_path));
    config_hash_ = fnv1a64(config_fingerprint(cfg_));
}

void Experiment::build_amplitude_stream(int codewords) const {
    std::size_t need = static_cast<std::size_t>(codewords) * frame_.n_sym;
    while (amp_stream_.size() < need) {
        std::size_t block_index = amp_stream_.size() / ccdm_->ns;
        Rng rng(derive_stream(cfg_.seed, Stream::CcdmBits, block_index));
        std::vector<std::uint8_t> bits(ccdm_->k);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_bit());
        auto block = ccdm_encode(*ccdm_, bits);
        amp_stream_.insert(amp_stream_.end(), block.begin(), block.end());
    }
}

std::vector<int> Experiment::codeword_amplitudes(int cw) const {
    std::vector<int> amps(frame_.n_sym);
    if (ccdm_) {
        std::size_t base = static_cast<std::size_t>(cw) * frame_.n_sym;
        std::copy_n(amp_stream_.begin() + base, frame_.n_sym, amps.begin());
    } else {
        Rng rng(derive_stream(cfg_.seed, Stream::IidAmplitudes, cw));
        for (int s = 0; s < frame_.n_sym; ++s) {
            double u = rng.next_unit();
            int a = 0;
            while (amp_cdf_[a] < u) ++a;
            amps[s] = a;
        }
    }
    return amps;
}

MetricReport Experiment::run_point(double snr_db, const PointOptions& opts) const {
    const int cw_count = cfg_.codewords;
    const int n = code_.n;
    const int n_sym = frame_.n_sym;
    const int m = cfg_.m;
    const double sigma = sigma_for_snr_db(snr_db);
    const double scale = demapper_.scale();
    const std::uint64_t snr_key = static_cast<std::uint64_t>(std::llround(snr_db * 1000.0));

    if (ccdm_) build_amplitude_stream(cw_count);

    LlrTrace trace;
    trace.m = m;
    trace.resize(static_cast<std::size_t>(cw_count) * n);
    std::vector<long> post_errors(cw_count, 0);

    // Each codeword owns its RNG streams and its slice of the trace, so the
    // schedule cannot affect the result.
#ifdef _OPENMP
    int threads = opts.parallel ? (cfg_.workers > 0 ? cfg_.workers : omp_get_max_threads()) : 1;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (int cw = 0; cw < cw_count; ++cw) {
        auto amps = codeword_amplitudes(cw);

        std::vector<std::uint8_t> uniform_bits(frame_.n_uniform);
        Rng sign_rng(derive_stream(cfg_.seed, Stream::SignBits, cw));
        for (auto& b : uniform_bits) b = static_cast<std::uint8_t>(sign_rng.next_bit());

        TxFrame tx = assemble_tx(frame_, constellation_, code_, amps, uniform_bits);

        std::vector<double> x(n_sym);
        for (int s = 0; s < n_sym; ++s) x[s] = scale * constellation_.points[tx.symbols[s]];
        auto y = transmit(x, sigma, derive_stream(cfg_.seed, Stream::Noise, snr_key, cw));

        std::vector<double> llr(static_cast<std::size_t>(n_sym) * m);
        demapper_.demap_block_serial(y, sigma, cfg_.llr_max, llr);

        std::size_t base = static_cast<std::size_t>(cw) * n;
        for (int s = 0; s < n_sym; ++s) {
            for (int i = 0; i < m; ++i) {
                std::size_t at = base + static_cast<std::size_t>(s) * m + i;
                int pos = frame_.bit_position(constellation_.label_index(i), s);
                trace.trib[at] = static_cast<std::uint8_t>(i);
                trace.bit[at] = tx.codeword[pos];
                trace.llr[at] = llr[static_cast<std::size_t>(s) * m + i];
            }
        }

        if (opts.decode) {
            std::vector<double> llr_cw(n);
            for (int s = 0; s < n_sym; ++s) {
                for (int i = 0; i < m; ++i) {
                    int pos = frame_.bit_position(constellation_.label_index(i), s);
                    llr_cw[pos] = llr[static_cast<std::size_t>(s) * m + i];
                }
            }
            auto result = decode(code_, llr_cw, cfg_.max_iter);
            long errors = 0;
            for (int j = 0; j < code_.k; ++j) errors += result.bits[j] != tx.codeword[j];
            post_errors[cw] = errors;
        }
    }

    auto est = estimate_metrics(trace, dist_.stats, cfg_.hist_bins, cfg_.llr_max);

    MetricReport r;
    r.label = cfg_.label;
    r.snr_db = snr_db;
    r.ber_pre = est.ber_pre;
    if (opts.decode) {
        long total = 0;
        for (long e : post_errors) total += e;
        r.ber_post = static_cast<double>(total) /
                     (static_cast<double>(cw_count) * code_.k);
    } else {
        r.ber_post = std::numeric_limits<double>::quiet_NaN();
    }
    r.i_n = est.i_n;
    r.i_s = est.i_s;
    r.i_a = est.i_a;
    r.ngmi = est.ngmi;
    r.i_mc = est.i_mc;
    r.r_bmd = est.r_bmd;
    r.rc_max = est.rc_max;
    r.h_pooled = dist_.stats.h_pooled;
    r.h_joint = dist_.stats.h_joint;
    r.sum_h_trib = 0.0;
    for (double h : dist_.stats.h_trib) r.sum_h_trib += h;
    r.i_n_raw = est.i_n_raw;
    r.i_s_raw = est.i_s_raw;
    r.i_a_raw = est.i_a_raw;
    r.ngmi_raw = est.ngmi_raw;
    r.i_mc_raw = est.i_mc_raw;
    r.emp_h_pooled = est.emp_h_pooled;
    r.codewords = cw_count;
    r.samples = trace.size();

    if (opts.trace_out) *opts.trace_out = std::move(trace);
    return r;
}

std::vector<double> Experiment::sweep_snrs() const {
    std::vector<double> snrs;
    for (int i = 0;; ++i) {
        double snr = cfg_.snr_start + i * cfg_.snr_step;
        if (snr > cfg_.snr_stop + 1e-9) break;
        snrs.push_back(snr);
    }
    return snrs;
}

SweepResult Experiment::run_sweep() const {
    SweepResult sweep;
    sweep.config_hash = config_hash_;
    sweep.table_hash = table_hash_;
    sweep.seed = cfg_.seed;
    for (double snr : sweep_snrs()) {
        sweep.rows.push_back(run_point(snr));
        if (cfg_.early_abort && sweep.rows.back().ber_post == 0.0) break;
    }
    return sweep;
}

}  // namespace pasim
