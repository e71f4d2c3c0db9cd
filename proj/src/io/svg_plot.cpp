// SPDX-License-Identifier: Apache-2.0
#include "stdce/io/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

namespace stdce::io {

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string tick_label(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

// Round step (1, 2 or 5 times a power of ten) giving about n intervals.
double nice_step(double span, int n)
{
    const double raw = span / n;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    return (r < 1.5 ? 1.0 : r < 3.5 ? 2.0 : r < 7.5 ? 5.0 : 10.0) * mag;
}

}  // namespace

std::string line_plot(const PlotSpec& spec, const std::vector<Series>& series)
{
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i)
            if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
                x0 = std::min(x0, s.x[i]);
                x1 = std::max(x1, s.x[i]);
                y0 = std::min(y0, s.y[i]);
                y1 = std::max(y1, s.y[i]);
            }
    if (!(x1 >= x0)) {
        x0 = 0.0;
        x1 = 1.0;
    }
    if (!(y1 >= y0)) {
        y0 = 0.0;
        y1 = 1.0;
    }
    if (x1 == x0) {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if (y1 == y0) {
        y0 -= 0.5;
        y1 += 0.5;
    }

    const double left = 80, right = 170, top = 40, bottom = 60;
    const double pw = spec.width - left - right;
    const double ph = spec.height - top - bottom;
    auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return top + (y1 - y) / (y1 - y0) * ph; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) +
           "\" height=\"" + std::to_string(spec.height) + "\" font-family=\"sans-serif\" " +
           "font-size=\"12\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + fmt(left + pw / 2) + "\" y=\"24\" text-anchor=\"middle\" " +
           "font-size=\"14\">" + escape(spec.title) + "</text>\n";
    out += "<rect x=\"" + fmt(left) + "\" y=\"" + fmt(top) + "\" width=\"" + fmt(pw) +
           "\" height=\"" + fmt(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

    const double sx = nice_step(x1 - x0, 6);
    for (double t = std::ceil(x0 / sx) * sx; t <= x1 + 1e-9 * sx; t += sx) {
        const double X = px(t);
        out += "<line x1=\"" + fmt(X) + "\" y1=\"" + fmt(top + ph) + "\" x2=\"" + fmt(X) +
               "\" y2=\"" + fmt(top + ph + 5) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + fmt(X) + "\" y=\"" + fmt(top + ph + 18) +
               "\" text-anchor=\"middle\">" + tick_label(std::abs(t) < 1e-12 * sx ? 0.0 : t) +
               "</text>\n";
    }
    const double sy = nice_step(y1 - y0, 5);
    for (double t = std::ceil(y0 / sy) * sy; t <= y1 + 1e-9 * sy; t += sy) {
        const double Y = py(t);
        out += "<line x1=\"" + fmt(left - 5) + "\" y1=\"" + fmt(Y) + "\" x2=\"" + fmt(left) +
               "\" y2=\"" + fmt(Y) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + fmt(left - 8) + "\" y=\"" + fmt(Y + 4) +
               "\" text-anchor=\"end\">" + tick_label(std::abs(t) < 1e-12 * sy ? 0.0 : t) +
               "</text>\n";
    }
    out += "<text x=\"" + fmt(left + pw / 2) + "\" y=\"" + fmt(spec.height - 16.0) +
           "\" text-anchor=\"middle\">" + escape(spec.x_label) + "</text>\n";
    out += "<text transform=\"translate(18," + fmt(top + ph / 2) + ") rotate(-90)\" " +
           "text-anchor=\"middle\">" + escape(spec.y_label) + "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = kPalette[k % (sizeof kPalette / sizeof kPalette[0])];
        std::string pts;
        auto flush = [&] {
            if (!pts.empty())
                out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
                       "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
            pts.clear();
        };
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                flush();
                continue;
            }
            if (!pts.empty())
                pts += ' ';
            pts += fmt(px(s.x[i])) + "," + fmt(py(s.y[i]));
        }
        flush();
        const double ly = top + 10 + 18.0 * static_cast<double>(k);
        out += "<line x1=\"" + fmt(left + pw + 12) + "\" y1=\"" + fmt(ly) + "\" x2=\"" +
               fmt(left + pw + 36) + "\" y2=\"" + fmt(ly) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + fmt(left + pw + 42) + "\" y=\"" + fmt(ly + 4) + "\">" +
               escape(s.label) + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

std::vector<Series> series_by_group(const ResultTable& t, const std::string& x_col,
                                    const std::string& y_col, const std::string& group_col,
                                    const std::string& label_prefix)
{
    const std::size_t gi = group_col.empty() ? 0 : t.column_index(group_col);
    std::vector<Series> out;
    std::map<std::string, std::size_t> index;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        std::string key;
        if (!group_col.empty()) {
            const auto& c = t.rows[r][gi];
            if (const auto* d = std::get_if<double>(&c))
                key = tick_label(*d);
            else if (const auto* s = std::get_if<std::string>(&c))
                key = *s;
            else if (const auto* i = std::get_if<long long>(&c))
                key = std::to_string(*i);
            else
                key = std::get<bool>(c) ? "true" : "false";
        }
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, out.size()).first;
            out.push_back({label_prefix + key, {}, {}});
        }
        out[it->second].x.push_back(t.real(r, x_col));
        out[it->second].y.push_back(t.real(r, y_col));
    }
    return out;
}

}  // namespace stdce::io
