#include "pasim/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "pasim/errors.hpp"

namespace pasim {

double report_column(const MetricReport& row, const std::string& column) {
    if (column == "snr_db") return row.snr_db;
    if (column == "ber_pre") return row.ber_pre;
    if (column == "one_minus_ber_pre") return 1.0 - row.ber_pre;
    if (column == "ber_post") return row.ber_post;
    if (column == "i_n") return row.i_n;
    if (column == "i_s") return row.i_s;
    if (column == "i_a") return row.i_a;
    if (column == "ngmi") return row.ngmi;
    if (column == "i_mc") return row.i_mc;
    if (column == "r_bmd") return row.r_bmd;
    if (column == "rc_max") return row.rc_max;
    throw ConfigError("unknown metric column: " + column);
}

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

struct Pt {
    double x, y;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string render_plot_svg(const std::vector<MetricReport>& rows,
                            const std::string& x_column) {
    std::map<std::string, std::vector<Pt>> series;
    double x_lo = 0, x_hi = 0, ly_lo = 0, ly_hi = 0;
    bool first = true;
    for (const auto& row : rows) {
        double x = report_column(row, x_column);
        double y = row.ber_post;
        if (!(y > 0.0) || std::isnan(x)) continue;  // log axis skips zero BER
        double ly = std::log10(y);
        if (first) {
            x_lo = x_hi = x;
            ly_lo = ly_hi = ly;
            first = false;
        }
        x_lo = std::min(x_lo, x);
        x_hi = std::max(x_hi, x);
        ly_lo = std::min(ly_lo, ly);
        ly_hi = std::max(ly_hi, ly);
        series[row.label].push_back({x, ly});
    }
    if (series.empty()) throw DataError("plot: no positive ber_post points for " + x_column);
    if (x_hi - x_lo < 1e-12) {
        x_lo -= 0.5;
        x_hi += 0.5;
    }
    ly_lo = std::floor(ly_lo) - 0.2;
    ly_hi = std::ceil(ly_hi) + 0.2;

    const double w = 800, h = 560, ml = 70, mr = 20, mt = 20, mb = 50;
    auto sx = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * (w - ml - mr); };
    auto sy = [&](double ly) { return h - mb - (ly - ly_lo) / (ly_hi - ly_lo) * (h - mt - mb); };

    std::string svg;
    char buf[512];
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"560\" "
           "viewBox=\"0 0 800 560\">\n";
    svg += "<rect width=\"800\" height=\"560\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%s\" y=\"%s\" width=\"%s\" height=\"%s\" fill=\"none\" "
                  "stroke=\"black\"/>\n",
                  fmt(ml).c_str(), fmt(mt).c_str(), fmt(w - ml - mr).c_str(),
                  fmt(h - mt - mb).c_str());
    svg += buf;

    for (int d = static_cast<int>(std::ceil(ly_lo)); d <= static_cast<int>(std::floor(ly_hi)); ++d) {
        double y = sy(d);
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%s\" y1=\"%s\" x2=\"%s\" y2=\"%s\" stroke=\"#cccccc\"/>\n"
                      "<text x=\"%s\" y=\"%s\" font-size=\"12\" text-anchor=\"end\">1e%d</text>\n",
                      fmt(ml).c_str(), fmt(y).c_str(), fmt(w - mr).c_str(), fmt(y).c_str(),
                      fmt(ml - 6).c_str(), fmt(y + 4).c_str(), d);
        svg += buf;
    }
    for (int t = 0; t <= 5; ++t) {
        double x = x_lo + (x_hi - x_lo) * t / 5.0;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%s\" y=\"%s\" font-size=\"12\" text-anchor=\"middle\">%.4g</text>\n",
                      fmt(sx(x)).c_str(), fmt(h - mb + 18).c_str(), x);
        svg += buf;
    }
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%s\" y=\"%s\" font-size=\"14\" text-anchor=\"middle\">%s</text>\n",
                  fmt((ml + w - mr) / 2).c_str(), fmt(h - 12).c_str(), x_column.c_str());
    svg += buf;
    svg += "<text x=\"16\" y=\"290\" font-size=\"14\" text-anchor=\"middle\" "
           "transform=\"rotate(-90 16 290)\">ber_post</text>\n";

    int color = 0;
    double legend_y = mt + 16;
    for (auto& [label, pts] : series) {
        std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.x < b.x; });
        const char* stroke = kPalette[color % 8];
        svg += "<path d=\"";
        for (std::size_t j = 0; j < pts.size(); ++j) {
            svg += (j == 0 ? "M" : " L");
            svg += fmt(sx(pts[j].x)) + " " + fmt(sy(pts[j].y));
        }
        std::snprintf(buf, sizeof buf, "\" fill=\"none\" stroke=\"%s\" stroke-width=\"1.5\"/>\n",
                      stroke);
        svg += buf;
        for (const auto& p : pts) {
            std::snprintf(buf, sizeof buf,
                          "<circle cx=\"%s\" cy=\"%s\" r=\"3\" fill=\"%s\"/>\n",
                          fmt(sx(p.x)).c_str(), fmt(sy(p.y)).c_str(), stroke);
            svg += buf;
        }
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%s\" y=\"%s\" font-size=\"12\" fill=\"%s\">%s</text>\n",
                      fmt(ml + 10).c_str(), fmt(legend_y).c_str(), stroke, label.c_str());
        svg += buf;
        legend_y += 16;
        ++color;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace pasim
