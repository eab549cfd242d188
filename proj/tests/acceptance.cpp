// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. The sweep criteria locate each configuration's waterfall
// first (coarse metric scan, then a short decode probe), then run the pinned
// fine sweeps. Expect roughly half an hour on one core.
#include <cmath>
#include <cstdio>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pasim/channel.hpp"
#include "pasim/errors.hpp"
#include "pasim/harness.hpp"
#include "pasim/rng.hpp"

using namespace pasim;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string data(const char* rel) { return std::string(PASIM_DATA_DIR) + rel; }

ExperimentConfig base_config(int m, const std::string& dist, const std::string& table,
                             const std::string& label) {
    ExperimentConfig cfg;
    cfg.m = m;
    cfg.distribution = parse_dist_spec(dist);
    cfg.mode = cfg.distribution.kind == DistKind::Uniform ? ShapingMode::Iid
                                                          : ShapingMode::Ccdm;
    cfg.table_path = data(table.c_str());
    cfg.seed = 1;
    cfg.label = label;
    cfg.snr_start = cfg.snr_stop = 0.0;
    return cfg;
}

// First SNR (0.5 dB grid) where NGMI reaches the code rate, from a cheap
// metrics-only run.
double ngmi_crossing(const ExperimentConfig& cfg) {
    ExperimentConfig probe_cfg = cfg;
    probe_cfg.codewords = 2;
    Experiment probe(probe_cfg);
    double rc = probe.code().rate();
    PointOptions opts;
    opts.decode = false;
    for (double snr = 4.0; snr <= 28.0; snr += 0.5) {
        if (probe.run_point(snr, opts).ngmi >= rc) return snr;
    }
    throw DataError("NGMI never reaches the code rate in the scan range");
}

// First 0.1 dB grid point where a 10-codeword probe decodes error free.
double waterfall_edge(const ExperimentConfig& cfg) {
    double start = ngmi_crossing(cfg);
    ExperimentConfig probe_cfg = cfg;
    probe_cfg.codewords = 6;
    Experiment coarse(probe_cfg);
    double zero_at = -1.0;
    for (double snr = start; snr <= start + 4.0 + 1e-9; snr += 0.3) {
        if (coarse.run_point(snr).ber_post == 0.0) {
            zero_at = snr;
            break;
        }
    }
    if (zero_at < 0) throw DataError("no error-free probe point near the NGMI crossing");
    probe_cfg.codewords = 10;
    Experiment fine(probe_cfg);
    for (double snr = std::max(start, zero_at - 0.3); snr <= zero_at + 2.0; snr += 0.1) {
        double grid = std::round(snr * 10.0) / 10.0;
        if (fine.run_point(grid).ber_post == 0.0) return grid;
    }
    throw DataError("waterfall edge refinement did not settle");
}

SweepResult window_sweep(ExperimentConfig cfg, double lo, double hi, int codewords,
                         bool early_abort) {
    cfg.snr_start = std::round(lo * 10.0) / 10.0;
    cfg.snr_stop = std::round(hi * 10.0) / 10.0;
    cfg.snr_step = 0.1;
    cfg.codewords = codewords;
    cfg.early_abort = early_abort;
    Experiment experiment(cfg);
    return experiment.run_sweep();
}

MetricCurve curve_of(const SweepResult& sweep, const char* column) {
    MetricCurve curve;
    if (!sweep.rows.empty()) curve.label = sweep.rows.front().label;
    for (const auto& row : sweep.rows) {
        double x = column == std::string("i_n")   ? row.i_n
                   : column == std::string("i_s") ? row.i_s
                   : column == std::string("i_a") ? row.i_a
                                                  : 1.0 - row.ber_pre;
        curve.points.emplace_back(x, row.ber_post);
    }
    return curve;
}

void criterion_1() {
    bool pass = true;
    std::string detail;
    for (auto [m, label] : {std::pair<int, const char*>{2, "uni16qam-r56"},
                            std::pair<int, const char*>{3, "uni64qam-r56"}}) {
        auto cfg = base_config(m, "uniform", "/ldpc/ira64800_r56.txt", label);
        double edge = waterfall_edge(cfg);
        auto sweep = window_sweep(cfg, edge - 0.4, edge, 25, false);
        double worst_ns = 0, worst_sa = 0, worst_ma = 0;
        for (const auto& row : sweep.rows) {
            worst_ns = std::max(worst_ns, std::abs(row.i_n - row.i_s));
            worst_sa = std::max(worst_sa, std::abs(row.i_s - row.i_a));
            worst_ma = std::max(worst_ma, std::abs(row.i_mc - row.i_a));
        }
        char buf[160];
        std::snprintf(buf, sizeof buf, " %s(5pts@%.1f): |In-Is|=%.2e |Is-Ia|=%.2e |Imc-Ia|=%.2e",
                      label, edge, worst_ns, worst_sa, worst_ma);
        detail += buf;
        pass = pass && sweep.rows.size() == 5 && worst_ns < 2e-3 && worst_sa < 2e-3 &&
               worst_ma < 2e-3;
    }
    report(1, pass, "uniform collapse |In-Is|,|Is-Ia|,|Imc-Ia| < 2e-3:" + detail);
}

void criterion_2() {
    bool pass = true;
    std::string detail;

    // exhaustive invertibility for small blocks
    long checked = 0;
    for (auto composition : std::vector<std::vector<int>>{
             {2, 2}, {3, 2, 1}, {4, 4, 4}, {6, 6}, {5, 4, 2, 1}, {12}}) {
        auto cfg = ccdm_config(composition);
        for (long u = 0; u < (1L << cfg.k); ++u) {
            std::vector<std::uint8_t> bits(cfg.k);
            for (int j = 0; j < cfg.k; ++j) bits[j] = (u >> (cfg.k - 1 - j)) & 1;
            if (ccdm_decode(cfg, ccdm_encode(cfg, bits)) != bits) pass = false;
            ++checked;
        }
    }
    detail += "exhaustive n<=12 (" + std::to_string(checked) + " blocks)";

    // randomized invertibility and rate loss at ns = 1024
    auto c = build_gray_pam(3, default_mapper(3));
    Rng rng(2024);
    for (double target : {2.803, 2.951, 2.995}) {
        auto d = maxwell_boltzmann_for_entropy(c, target);
        auto cfg = composition_for(amplitude_pmf(c, d), 1024);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<std::uint8_t> bits(cfg.k);
            for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_bit());
            if (ccdm_decode(cfg, ccdm_encode(cfg, bits)) != bits) pass = false;
        }
        double loss = rate_loss(cfg);
        char buf[96];
        std::snprintf(buf, sizeof buf, "; H=%.3f: k=%d loss=%.4f%%", target, cfg.k,
                      100.0 * loss);
        detail += buf;
        pass = pass && loss < 0.0055;
    }
    report(2, pass, "ccdm invertibility and rate loss < 0.55%: " + detail);
}

void criterion_3() {
    const double table_h_pooled[] = {0.9831, 0.9967, 0.9997};
    const double table_sum_h[] = {2.841, 2.960, 2.996};
    const double targets[] = {2.803, 2.951, 2.995};
    auto c = build_gray_pam(3, default_mapper(3));
    bool pass = true;
    std::string detail;
    for (int j = 0; j < 3; ++j) {
        auto d = maxwell_boltzmann_for_entropy(c, targets[j]);
        double sum_h = 0;
        for (double h : d.stats.h_trib) sum_h += h;
        double dev_pool = d.stats.h_pooled - table_h_pooled[j];
        double dev_sum = sum_h - table_sum_h[j];
        pass = pass && std::abs(dev_pool) < 0.01 && std::abs(dev_sum) < 0.01;
        char buf[128];
        std::snprintf(buf, sizeof buf, " H=%.3f: H(B)=%.4f (dev %+0.4f) sumH=%.4f (dev %+0.4f);",
                      targets[j], d.stats.h_pooled, dev_pool, sum_h, dev_sum);
        detail += buf;
    }
    report(3, pass, "table reconstruction within 0.01 bits:" + detail);
}

void criterion_4() {
    Rng rng(4004);
    double worst = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        int m = 1 + static_cast<int>(rng.next_u64() % 3);
        auto c = build_gray_pam(m, default_mapper(m));
        double target = 1.0 + (m - 1.0) * rng.next_unit();
        auto d = maxwell_boltzmann_for_entropy(c, target);
        Demapper dm(c, d);
        double scale = unit_energy_scale(c, d);
        double y = 8.0 * rng.next_unit() - 4.0;
        double sigma = 0.1 + 2.9 * rng.next_unit();
        int trib = static_cast<int>(rng.next_u64() % m);
        double got = dm.raw_llr(y, sigma, trib);
        double want = static_cast<double>(oracles::naive_llr(c, d, scale, y, sigma, trib));
        worst = std::max(worst, std::abs(got - want));
    }
    bool pass = worst < 1e-9;

    auto c2 = build_gray_pam(1, default_mapper(1));
    auto d2 = uniform_distribution(c2);
    Demapper dm2(c2, d2);
    double worst2 = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        double y = 6.0 * rng.next_unit() - 3.0;
        double sigma = 0.2 + 2.0 * rng.next_unit();
        worst2 = std::max(worst2,
                          std::abs(dm2.raw_llr(y, sigma, 0) - 2.0 * y / (sigma * sigma)));
    }
    pass = pass && worst2 < 1e-12;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "demapper exactness: 1e4 oracle cases max err %.2e (<1e-9), "
                  "2-PAM closed form max err %.2e (<1e-12)",
                  worst, worst2);
    report(4, pass, buf);
}

void criterion_5() {
    bool pass = true;
    std::string detail;

    auto toy = load_code(data("/ldpc/toy12.txt"));
    Rng rng(55);
    std::vector<std::uint8_t> info(toy.k);
    for (auto& b : info) b = static_cast<std::uint8_t>(rng.next_bit());
    auto cw = encode(toy, info);
    int corrected = 0;
    for (int flip = 0; flip < toy.n; ++flip) {
        std::vector<double> llr(toy.n);
        for (int j = 0; j < toy.n; ++j) llr[j] = cw[j] ? -50.0 : 50.0;
        llr[flip] = cw[flip] ? 10.0 : -10.0;
        auto res = decode(toy, llr, 20);
        corrected += res.parity_ok && res.bits == cw;
    }
    pass = pass && corrected == toy.n;
    detail += "toy single-flip corrected " + std::to_string(corrected) + "/12";

    auto code = load_code(data("/ldpc/ira64800_r23.txt"));
    pass = pass && code.n == 64800 && code.k == 43200;
    detail += "; r2/3 table n=" + std::to_string(code.n) + " k=" + std::to_string(code.k);

    int ok = 0;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::uint8_t> bits(code.k);
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next_bit());
        ok += check_parity(code, encode(code, bits));
    }
    pass = pass && ok == 10;
    detail += "; encoder parity ok " + std::to_string(ok) + "/10";
    report(5, pass, "ldpc sanity: " + detail);
}

struct SweepSet {
    std::map<std::string, std::map<std::string, SweepResult>> by_rate;  // rate -> label
};

SweepSet run_figure_sweeps() {
    SweepSet set;
    struct Fmt {
        const char* dist;
        const char* label;
    };
    const Fmt formats[] = {{"uniform", "uni64qam"}, {"mb:2.803", "shaped-i"},
                           {"mb:2.995", "shaped-iii"}};
    const std::pair<const char*, const char*> rates[] = {
        {"2/3", "/ldpc/ira64800_r23.txt"}, {"5/6", "/ldpc/ira64800_r56.txt"}};
    for (auto [rate, table] : rates) {
        for (auto [dist, label] : formats) {
            auto cfg = base_config(3, dist, table, std::string(label) + "-r" + rate);
            double edge = waterfall_edge(cfg);
            std::fprintf(stderr, "  sweep %s: waterfall edge %.1f dB\n",
                         cfg.label.c_str(), edge);
            set.by_rate[rate][label] = window_sweep(cfg, edge - 0.6, edge + 0.1, 100, true);
        }
    }
    return set;
}

void criteria_6_7(const SweepSet& set) {
    const double target = 1e-3;
    std::map<std::string, double> delta_metric, delta_ber;
    bool shaped_in_lower = true;
    std::string detail6, detail7;
    for (const char* column : {"i_n", "i_s", "i_a"}) {
        for (const auto& [rate, sweeps] : set.by_rate) {
            std::vector<MetricCurve> curves;
            for (const auto& [label, sweep] : sweeps) curves.push_back(curve_of(sweep, column));
            auto acc = accuracy_analysis(curves, target);
            if (!acc.excluded.empty())
                std::fprintf(stderr, "  warning: %zu curve(s) excluded for %s at r%s\n",
                             acc.excluded.size(), column, rate.c_str());
            delta_metric[column] = std::max(delta_metric[column], acc.delta_metric);
            delta_ber[column] = std::max(delta_ber[column], acc.delta_ber);
            if (column == std::string("i_n")) {
                double uni = 0, shaped = 0;
                for (auto& [label, x] : acc.metric_at_target) {
                    if (label.rfind("uni64qam", 0) == 0) uni = x;
                    if (label.rfind("shaped-i-", 0) == 0) shaped = x;
                }
                shaped_in_lower = shaped_in_lower && shaped > 0 && uni > 0 && shaped < uni;
            }
        }
    }
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "dM(i_a)=%.4f dM(i_s)=%.4f dM(i_n)=%.4f ratio=%.1f shaped-In-lower=%s",
                  delta_metric["i_a"], delta_metric["i_s"], delta_metric["i_n"],
                  delta_metric["i_a"] > 0 ? delta_metric["i_n"] / delta_metric["i_a"] : 1e9,
                  shaped_in_lower ? "yes" : "no");
    detail6 = buf;
    bool pass6 = delta_metric["i_a"] < delta_metric["i_s"] &&
                 delta_metric["i_s"] < delta_metric["i_n"] &&
                 delta_metric["i_n"] >= 3.0 * delta_metric["i_a"] && shaped_in_lower;
    report(6, pass6, "metric spread ordering at BER_post = 1e-3: " + detail6);

    std::snprintf(buf, sizeof buf, "dBER(i_a)=%.3g dBER(i_n)=%.3g", delta_ber["i_a"],
                  delta_ber["i_n"]);
    detail7 = buf;
    report(7, delta_ber["i_a"] < delta_ber["i_n"],
           "BER spread ordering at the mean metric: " + detail7);
}

// Sweep invariants: post-FEC BER monotone non-increasing up to Monte Carlo
// noise, and a steep fall through the 1e-2 .. 1e-3 decade.
void sweep_properties(const SweepSet& set) {
    bool pass = true;
    std::string detail;
    for (const auto& [rate, sweeps] : set.by_rate) {
        for (const auto& [label, sweep] : sweeps) {
            const auto& rows = sweep.rows;
            for (std::size_t j = 0; j + 1 < rows.size(); ++j) {
                double p = rows[j].ber_post;
                double sd = std::sqrt(std::max(p * (1 - p), 1e-12) / rows[j].codewords);
                if (rows[j + 1].ber_post > p + 2.0 * sd) {
                    pass = false;
                    detail += " " + rows[j].label + ": BER rose at " +
                              std::to_string(rows[j + 1].snr_db) + " dB;";
                }
            }
            double at_1e2 = 1e9, at_1e3 = 1e9;
            for (std::size_t j = 0; j + 1 < rows.size(); ++j) {
                auto cross = [&](double t) {
                    double a = rows[j].ber_post, b = rows[j + 1].ber_post;
                    if (!(a > 0.0)) return 1e9;
                    double lb = b > 0.0 ? std::log10(b) : -12.0;
                    double la = std::log10(a);
                    if (la < std::log10(t) || lb > std::log10(t)) return 1e9;
                    return rows[j].snr_db + 0.1 * (std::log10(t) - la) / (lb - la);
                };
                at_1e2 = std::min(at_1e2, cross(1e-2));
                at_1e3 = std::min(at_1e3, cross(1e-3));
            }
            if (at_1e3 > 1e8 || at_1e2 > 1e8 || at_1e3 - at_1e2 > 0.5) {
                pass = false;
                detail += " " + rows.front().label + ": 1e-2 to 1e-3 span " +
                          std::to_string(at_1e3 - at_1e2) + " dB;";
            }
        }
    }
    std::printf("[%s] sweep properties: monotone BER_post, steep waterfall%s\n",
                pass ? "PASS" : "FAIL", pass ? "" : detail.c_str());
    if (!pass) ++g_failures;
}

void criterion_8() {
    auto cfg = base_config(3, "mb:2.803", "/ldpc/ira64800_r23.txt", "det-check");
    cfg.snr_start = 13.0;
    cfg.snr_stop = 13.2;
    cfg.snr_step = 0.1;
    cfg.codewords = 10;
    auto csv1 = sweep_to_csv(Experiment(cfg).run_sweep());
    auto csv2 = sweep_to_csv(Experiment(cfg).run_sweep());
    bool pass = csv1 == csv2 && !csv1.empty();
    report(8, pass, pass ? "repeated run is byte-identical CSV ("
                               + std::to_string(csv1.size()) + " bytes)"
                         : "repeated run differs");
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && !std::strcmp(argv[1], "--quick");
    try {
        criterion_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_8();
        if (!quick) {
            criterion_1();
            auto sweeps = run_figure_sweeps();
            criteria_6_7(sweeps);
            sweep_properties(sweeps);
        } else {
            std::printf("[SKIP] criteria 1, 6, 7: sweep criteria disabled by --quick\n");
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance aborted: %s\n", e.what());
        return 1;
    }
    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
