#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pasim/channel.hpp"
#include "pasim/config.hpp"
#include "pasim/errors.hpp"
#include "pasim/harness.hpp"
#include "pasim/metrics.hpp"
#include "pasim/plot.hpp"
#include "pasim/rng.hpp"
#include "pasim/shaping.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pasim::DataError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string read_stream(std::istream& in) {
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pasim::DataError("cannot write " + path);
    out << bytes;
}

std::vector<std::uint8_t> parse_bit_text(const std::string& text) {
    std::vector<std::uint8_t> bits;
    for (char c : text) {
        if (c == '0' || c == '1')
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw pasim::DataError(std::string("bit stream contains '") + c + "'");
    }
    return bits;
}

pasim::CcdmConfig ccdm_from_args(const std::string& pmf_path, int ns) {
    std::istringstream in(read_file(pmf_path));
    std::vector<double> pmf;
    double v;
    while (in >> v) pmf.push_back(v);
    if (pmf.empty()) throw pasim::DataError("amplitude pmf file is empty");
    double sum = 0.0;
    for (double p : pmf) {
        if (p < 0.0) throw pasim::DataError("amplitude pmf must be nonnegative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-6) throw pasim::DataError("amplitude pmf must sum to 1");
    for (double& p : pmf) p /= sum;
    return pasim::composition_for(pmf, ns);
}

// Reads sweep CSVs and groups rows into per-label metric curves.
std::vector<pasim::MetricCurve> curves_from_files(const std::vector<std::string>& paths,
                                                  const std::string& column) {
    std::vector<pasim::MetricCurve> curves;
    for (const auto& path : paths) {
        for (const auto& row : pasim::parse_report_csv(read_file(path))) {
            pasim::MetricCurve* curve = nullptr;
            for (auto& c : curves) {
                if (c.label == row.label) curve = &c;
            }
            if (!curve) {
                curves.push_back({row.label, {}});
                curve = &curves.back();
            }
            curve->points.emplace_back(pasim::report_column(row, column), row.ber_post);
        }
    }
    return curves;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo workbench for shaped PAM with binary soft-decision FEC"};
    app.require_subcommand(1);

    // simulate
    auto* sim = app.add_subcommand("simulate", "run a configured SNR sweep");
    std::string sim_config, sim_out, sim_trace_out;
    sim->add_option("--config", sim_config, "experiment config file")->required();
    sim->add_option("--out", sim_out, "output sweep CSV")->required();
    sim->add_option("--trace-out", sim_trace_out,
                    "dump the LLR trace CSV (single-point sweeps only)");

    // analyze
    auto* ana = app.add_subcommand("analyze", "metric report from a trace, or "
                                              "prediction accuracy from sweeps");
    std::vector<std::string> ana_in;
    std::string ana_trace, ana_dist = "uniform", ana_out;
    double ana_target = 1e-3;
    int ana_m = 3, ana_bins = 32;
    double ana_llr_max = 50.0;
    bool ana_have_target = false;
    ana->add_option("--in", ana_in, "sweep CSV inputs (repeatable)");
    auto* topt = ana->add_option("--target-ber", ana_target, "target post-FEC BER");
    ana->add_option("--trace", ana_trace, "LLR trace CSV input");
    ana->add_option("--dist", ana_dist, "trace mode: uniform | mb:<H> | file:<path>");
    ana->add_option("--m", ana_m, "trace mode: bits per symbol");
    ana->add_option("--bins", ana_bins, "histogram bins");
    ana->add_option("--llr-max", ana_llr_max, "LLR clip value");
    ana->add_option("--out", ana_out, "output CSV")->required();

    // plot
    auto* plt = app.add_subcommand("plot", "render a sweep CSV as SVG");
    std::string plt_in, plt_x = "i_a", plt_out;
    plt->add_option("--in", plt_in, "sweep CSV")->required();
    plt->add_option("--x", plt_x, "metric column for the x axis");
    plt->add_option("--out", plt_out, "output SVG")->required();

    // ccdm
    auto* ccdm = app.add_subcommand("ccdm", "constant-composition matcher");
    ccdm->require_subcommand(1);
    std::string ccdm_pmf;
    int ccdm_ns = 1024;
    auto* enc = ccdm->add_subcommand("encode", "bits on stdin, amplitude indices on stdout");
    auto* dec = ccdm->add_subcommand("decode", "amplitude indices on stdin, bits on stdout");
    for (auto* sub : {enc, dec}) {
        sub->add_option("--pmf", ccdm_pmf, "amplitude pmf file, one value per line")->required();
        sub->add_option("--ns", ccdm_ns, "block length");
    }

    // ldpc
    auto* ldpc = app.add_subcommand("ldpc", "LDPC utilities");
    ldpc->require_subcommand(1);
    auto* chk = ldpc->add_subcommand("check", "validate an address table");
    std::string chk_table;
    chk->add_option("--table", chk_table, "address table file")->required();

    // dist
    auto* dst = app.add_subcommand("dist", "print a symbol distribution");
    int dst_m = 3;
    std::string dst_spec = "uniform";
    dst->add_option("--m", dst_m, "bits per symbol");
    dst->add_option("--spec", dst_spec, "uniform | mb:<H> | file:<path>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) {
            auto cfg = pasim::load_config(sim_config);
            pasim::Experiment experiment(cfg);
            if (!sim_trace_out.empty()) {
                if (experiment.sweep_snrs().size() != 1)
                    throw pasim::ConfigError("--trace-out needs a single-point sweep");
                pasim::LlrTrace trace;
                pasim::PointOptions opts;
                opts.trace_out = &trace;
                pasim::SweepResult sweep;
                sweep.config_hash = experiment.config_hash();
                sweep.table_hash = experiment.table_hash();
                sweep.seed = cfg.seed;
                sweep.rows.push_back(experiment.run_point(cfg.snr_start, opts));
                write_file(sim_out, pasim::sweep_to_csv(sweep));
                write_file(sim_trace_out, pasim::trace_to_csv(trace));
            } else {
                write_file(sim_out, pasim::sweep_to_csv(experiment.run_sweep()));
            }
        } else if (ana->parsed()) {
            ana_have_target = topt->count() > 0;
            if (!ana_trace.empty()) {
                auto trace = pasim::trace_from_csv(read_file(ana_trace));
                auto c = pasim::build_gray_pam(ana_m, pasim::default_mapper(ana_m));
                pasim::ShapedDistribution d;
                auto spec = pasim::parse_dist_spec(ana_dist);
                switch (spec.kind) {
                    case pasim::DistKind::Uniform:
                        d = pasim::uniform_distribution(c);
                        break;
                    case pasim::DistKind::MaxwellBoltzmann:
                        d = pasim::maxwell_boltzmann_for_entropy(c, spec.entropy);
                        break;
                    case pasim::DistKind::File:
                        d = pasim::parse_distribution(c, read_file(spec.path));
                        break;
                }
                if (trace.m > ana_m)
                    throw pasim::DataError("trace has more tributaries than --m");
                trace.m = ana_m;
                auto est = pasim::estimate_metrics(trace, d.stats, ana_bins, ana_llr_max);
                pasim::MetricReport r;
                r.label = "trace";
                r.snr_db = std::numeric_limits<double>::quiet_NaN();
                r.ber_pre = est.ber_pre;
                r.ber_post = std::numeric_limits<double>::quiet_NaN();
                r.i_n = est.i_n;
                r.i_s = est.i_s;
                r.i_a = est.i_a;
                r.ngmi = est.ngmi;
                r.i_mc = est.i_mc;
                r.r_bmd = est.r_bmd;
                r.rc_max = est.rc_max;
                r.h_pooled = d.stats.h_pooled;
                r.h_joint = d.stats.h_joint;
                for (double h : d.stats.h_trib) r.sum_h_trib += h;
                r.i_n_raw = est.i_n_raw;
                r.i_s_raw = est.i_s_raw;
                r.i_a_raw = est.i_a_raw;
                r.ngmi_raw = est.ngmi_raw;
                r.i_mc_raw = est.i_mc_raw;
                r.emp_h_pooled = est.emp_h_pooled;
                r.samples = est.samples;
                std::string out = std::string(pasim::kReportColumns) + "\n" +
                                  pasim::report_row_csv(r) + "\n";
                write_file(ana_out, out);
            } else if (!ana_in.empty()) {
                std::string out = "metric,delta_metric,delta_ber_post,mean_metric,"
                                  "interpolated\n";
                for (const std::string& column : {std::string("one_minus_ber_pre"),
                                                  std::string("i_n"), std::string("i_s"),
                                                  std::string("i_a")}) {
                    auto curves = curves_from_files(ana_in, column);
                    auto acc = pasim::accuracy_analysis(curves, ana_target);
                    char buf[256];
                    std::snprintf(buf, sizeof buf, "%s,%.10g,%.10g,%.10g,",
                                  column.c_str(), acc.delta_metric, acc.delta_ber,
                                  acc.mean_metric);
                    out += buf;
                    for (std::size_t j = 0; j < acc.metric_at_target.size(); ++j) {
                        std::snprintf(buf, sizeof buf, "%s%s=%.10g", j ? ";" : "",
                                      acc.metric_at_target[j].first.c_str(),
                                      acc.metric_at_target[j].second);
                        out += buf;
                    }
                    for (const auto& label : acc.excluded) out += ";" + label + "=excluded";
                    out += "\n";
                }
                (void)ana_have_target;
                write_file(ana_out, out);
            } else {
                throw pasim::ConfigError("analyze needs --trace or --in");
            }
        } else if (plt->parsed()) {
            auto rows = pasim::parse_report_csv(read_file(plt_in));
            write_file(plt_out, pasim::render_plot_svg(rows, plt_x));
        } else if (enc->parsed()) {
            auto cfg = ccdm_from_args(ccdm_pmf, ccdm_ns);
            auto bits = parse_bit_text(read_stream(std::cin));
            if (cfg.k == 0 && !bits.empty())
                throw pasim::DataError("this composition carries no bits (k = 0)");
            if (cfg.k > 0 && (bits.empty() || bits.size() % cfg.k != 0))
                throw pasim::DataError("bit count must be a positive multiple of k = " +
                                       std::to_string(cfg.k));
            std::size_t blocks = cfg.k > 0 ? bits.size() / cfg.k : 1;
            for (std::size_t b = 0; b < blocks; ++b) {
                auto block = pasim::ccdm_encode(
                    cfg, std::span(bits).subspan(b * cfg.k, cfg.k));
                for (std::size_t j = 0; j < block.size(); ++j)
                    std::printf("%d%c", block[j], j + 1 < block.size() ? ' ' : '\n');
            }
        } else if (dec->parsed()) {
            auto cfg = ccdm_from_args(ccdm_pmf, ccdm_ns);
            std::istringstream in(read_stream(std::cin));
            std::vector<int> symbols;
            int v;
            while (in >> v) symbols.push_back(v);
            if (symbols.empty() || symbols.size() % cfg.ns != 0)
                throw pasim::DataError("symbol count must be a multiple of ns");
            for (std::size_t b = 0; b < symbols.size() / cfg.ns; ++b) {
                auto bits = pasim::ccdm_decode(
                    cfg, std::span(symbols).subspan(b * cfg.ns, cfg.ns));
                for (std::uint8_t bit : bits) std::putchar('0' + bit);
                std::putchar('\n');
            }
        } else if (chk->parsed()) {
            auto code = pasim::load_code(chk_table);
            pasim::Rng rng(1);
            std::vector<std::uint8_t> info(code.k);
            for (int trial = 0; trial < 3; ++trial) {
                for (auto& b : info) b = static_cast<std::uint8_t>(rng.next_bit());
                auto cw = pasim::encode(code, info);
                if (!pasim::check_parity(code, cw))
                    throw pasim::DataError("encoder output violates the parity checks");
            }
            std::printf("n=%d k=%d rate=%.6g group=%d q=%d edges=%d\n", code.n, code.k,
                        code.rate(), code.group, code.q, code.num_edges());
        } else if (dst->parsed()) {
            auto c = pasim::build_gray_pam(dst_m, pasim::default_mapper(dst_m));
            auto spec = pasim::parse_dist_spec(dst_spec);
            pasim::ShapedDistribution d;
            switch (spec.kind) {
                case pasim::DistKind::Uniform:
                    d = pasim::uniform_distribution(c);
                    break;
                case pasim::DistKind::MaxwellBoltzmann:
                    d = pasim::maxwell_boltzmann_for_entropy(c, spec.entropy);
                    break;
                case pasim::DistKind::File:
                    d = pasim::parse_distribution(c, read_file(spec.path));
                    break;
            }
            std::fputs(pasim::format_distribution(d).c_str(), stdout);
        }
    } catch (const pasim::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const pasim::DataError& e) {
        std::fprintf(stderr, "data error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
