#pragma once

#include <string>
#include <vector>

#include "pasim/csv.hpp"

namespace pasim {

// Scatter+line plot of ber_post (log axis) against one metric column, one
// series per label. Output bytes are deterministic for a fixed input.
std::string render_plot_svg(const std::vector<MetricReport>& rows,
                            const std::string& x_column);

double report_column(const MetricReport& row, const std::string& column);

}  // namespace pasim
