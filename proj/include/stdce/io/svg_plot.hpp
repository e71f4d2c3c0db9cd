// SPDX-License-Identifier: Apache-2.0
//
// Minimal SVG line plots: axes, tick labels, polylines and a legend.
#pragma once

#include <string>
#include <vector>

#include "stdce/io/result_table.hpp"

namespace stdce::io {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 720;
    int height = 480;
};

/// Non-finite points break the polyline. Output depends only on the input.
std::string line_plot(const PlotSpec& spec, const std::vector<Series>& series);

/// One series per distinct value of group_col (in order of first
/// appearance), taking x and y from the named numeric columns. An empty
/// group_col gives a single series.
std::vector<Series> series_by_group(const ResultTable& t, const std::string& x_col,
                                    const std::string& y_col, const std::string& group_col = "",
                                    const std::string& label_prefix = "");

}  // namespace stdce::io
