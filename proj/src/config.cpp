#include "pasim/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "pasim/errors.hpp"

namespace pasim {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(std::stoi(trim(item)));
        } catch (const std::exception&) {
            throw ConfigError("bad integer list element: " + item);
        }
    }
    return out;
}

double parse_double(const std::string& key, const std::string& s) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric value for " + key + ": " + s);
    }
}

long parse_long(const std::string& key, const std::string& s) {
    try {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad integer value for " + key + ": " + s);
    }
}

bool parse_bool(const std::string& key, const std::string& s) {
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw ConfigError("bad boolean value for " + key + ": " + s);
}

}  // namespace

DistSpec parse_dist_spec(const std::string& text) {
    DistSpec spec;
    if (text == "uniform") {
        spec.kind = DistKind::Uniform;
    } else if (text.rfind("mb:", 0) == 0) {
        spec.kind = DistKind::MaxwellBoltzmann;
        spec.entropy = parse_double("distribution", text.substr(3));
    } else if (text.rfind("file:", 0) == 0) {
        spec.kind = DistKind::File;
        spec.path = text.substr(5);
        if (spec.path.empty()) throw ConfigError("distribution file path is empty");
    } else {
        throw ConfigError("distribution must be uniform, mb:<entropy> or file:<path>");
    }
    return spec;
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    bool have_dist = false, have_table = false, have_snr = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("unterminated section header: " + line);
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = section + "." + trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        if (key == "constellation.m") {
            cfg.m = static_cast<int>(parse_long(key, value));
        } else if (key == "constellation.mapper") {
            cfg.mapper = parse_int_list(value);
        } else if (key == "shaping.distribution") {
            cfg.distribution = parse_dist_spec(value);
            have_dist = true;
        } else if (key == "shaping.mode") {
            if (value == "ccdm")
                cfg.mode = ShapingMode::Ccdm;
            else if (value == "iid")
                cfg.mode = ShapingMode::Iid;
            else
                throw ConfigError("shaping.mode must be ccdm or iid");
        } else if (key == "shaping.ns") {
            cfg.ns = static_cast<int>(parse_long(key, value));
        } else if (key == "fec.table") {
            cfg.table_path = value;
            have_table = true;
        } else if (key == "fec.max_iter") {
            cfg.max_iter = static_cast<int>(parse_long(key, value));
        } else if (key == "sweep.snr_start") {
            cfg.snr_start = parse_double(key, value);
            have_snr = true;
        } else if (key == "sweep.snr_stop") {
            cfg.snr_stop = parse_double(key, value);
        } else if (key == "sweep.snr_step") {
            cfg.snr_step = parse_double(key, value);
        } else if (key == "sweep.codewords") {
            cfg.codewords = static_cast<int>(parse_long(key, value));
        } else if (key == "sweep.early_abort") {
            cfg.early_abort = parse_bool(key, value);
        } else if (key == "run.seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_long(key, value));
        } else if (key == "run.workers") {
            cfg.workers = static_cast<int>(parse_long(key, value));
        } else if (key == "run.label") {
            cfg.label = value;
        } else if (key == "run.hist_bins") {
            cfg.hist_bins = static_cast<int>(parse_long(key, value));
        } else if (key == "run.llr_max") {
            cfg.llr_max = parse_double(key, value);
        } else {
            throw ConfigError("unknown config key: " + key);
        }
    }
    if (!have_dist) throw ConfigError("missing shaping.distribution");
    if (!have_table) throw ConfigError("missing fec.table");
    if (!have_snr) throw ConfigError("missing sweep.snr_start");
    if (cfg.snr_step <= 0.0) throw ConfigError("sweep.snr_step must be positive");
    if (cfg.codewords < 1) throw ConfigError("sweep.codewords must be at least 1");
    if (cfg.distribution.kind == DistKind::Uniform) cfg.mode = ShapingMode::Iid;
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace pasim
