#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pasim {

enum class DistKind { Uniform, MaxwellBoltzmann, File };
enum class ShapingMode { Ccdm, Iid };

struct DistSpec {
    DistKind kind = DistKind::Uniform;
    double entropy = 0.0;  // MaxwellBoltzmann target
    std::string path;      // File source
};

// "uniform" | "mb:<entropy>" | "file:<path>"
DistSpec parse_dist_spec(const std::string& text);

struct ExperimentConfig {
    int m = 3;
    std::vector<int> mapper;  // empty means default (m, m-1, ..., 1)
    DistSpec distribution;
    ShapingMode mode = ShapingMode::Ccdm;  // uniform distributions always run iid
    int ns = 1024;
    std::string table_path;
    int max_iter = 20;
    double snr_start = 0.0, snr_stop = 0.0, snr_step = 0.1;
    int codewords = 100;
    bool early_abort = true;
    std::uint64_t seed = 1;
    int workers = 0;  // 0 = library default
    std::string label = "run";
    int hist_bins = 32;
    double llr_max = 50.0;
};

// Flat "key = value" file with [section] headers; '#' starts a comment.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

}  // namespace pasim
