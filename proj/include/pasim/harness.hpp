#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pasim/channel.hpp"
#include "pasim/config.hpp"
#include "pasim/constellation.hpp"
#include "pasim/csv.hpp"
#include "pasim/demapper.hpp"
#include "pasim/fec.hpp"
#include "pasim/framing.hpp"
#include "pasim/metrics.hpp"
#include "pasim/shaping.hpp"

namespace pasim {

struct PointOptions {
    bool decode = true;         // false: metrics only, ber_post = NaN
    LlrTrace* trace_out = nullptr;
    bool parallel = true;       // false forces the serial reference path
};

// One configured transmission chain: constellation, distribution, code, frame.
// run_point simulates cfg.codewords codewords at one SNR; codewords are
// independent given the seed, so they run in parallel with identical output.
class Experiment {
  public:
    explicit Experiment(const ExperimentConfig& cfg);

    const ExperimentConfig& config() const { return cfg_; }
    const Constellation& constellation() const { return constellation_; }
    const ShapedDistribution& distribution() const { return dist_; }
    const LdpcCode& code() const { return code_; }
    const CodewordFrame& frame() const { return frame_; }
    const CcdmConfig* ccdm() const { return ccdm_ ? &*ccdm_ : nullptr; }

    std::uint64_t config_hash() const { return config_hash_; }
    std::uint64_t table_hash() const { return table_hash_; }

    MetricReport run_point(double snr_db, const PointOptions& opts = {}) const;
    SweepResult run_sweep() const;

    std::vector<double> sweep_snrs() const;

  private:
    void build_amplitude_stream(int codewords) const;
    std::vector<int> codeword_amplitudes(int cw) const;

    ExperimentConfig cfg_;
    Constellation constellation_;
    ShapedDistribution dist_;
    LdpcCode code_;
    CodewordFrame frame_;
    Demapper demapper_;
    std::optional<CcdmConfig> ccdm_;
    std::vector<double> amp_cdf_;  // iid mode
    mutable std::vector<int> amp_stream_;  // ccdm mode, lazily extended
    std::uint64_t table_hash_ = 0;
    std::uint64_t config_hash_ = 0;
};

std::string config_fingerprint(const ExperimentConfig& cfg);

}  // namespace pasim
