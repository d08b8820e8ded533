#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace recsizer::svg {

namespace {

constexpr int kWidth = 860;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 160;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 45;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
constexpr int kPaletteSize = 10;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Range {
    double lo = 0.0, hi = 1.0;
};

Range value_range(const std::vector<Series>& series) {
    Range r{0.0, 0.0};
    bool any = false;
    for (const Series& s : series) {
        for (double v : s.values) {
            if (!any) {
                r.lo = r.hi = v;
                any = true;
            }
            r.lo = std::min(r.lo, v);
            r.hi = std::max(r.hi, v);
        }
    }
    if (!any) return {0.0, 1.0};
    r.lo = std::min(r.lo, 0.0);
    r.hi = std::max(r.hi, 0.0);
    if (r.hi - r.lo < 1e-9) r.hi = r.lo + 1.0;
    const double pad = 0.05 * (r.hi - r.lo);
    return {r.lo - pad, r.hi + pad};
}

void open_svg(std::ostringstream& os, int width, int height, const std::string& title,
              const std::string& provenance) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    if (!provenance.empty()) os << "<!-- " << provenance << " -->\n";
    os << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
          "font-family=\"sans-serif\" font-size=\"15\" font-weight=\"bold\">"
       << title << "</text>\n";
}

void draw_axes(std::ostringstream& os, int x0, int y0, int x1, int y1, const Range& range,
               const std::string& x_label, const std::string& y_label) {
    os << "<line x1=\"" << x0 << "\" y1=\"" << y1 << "\" x2=\"" << x1 << "\" y2=\"" << y1
       << "\" stroke=\"#333\"/>\n";
    os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
       << "\" stroke=\"#333\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double v = range.lo + (range.hi - range.lo) * k / 4.0;
        const double y = y1 - (y1 - y0) * k / 4.0;
        os << "<line x1=\"" << x0 - 4 << "\" y1=\"" << fmt(y) << "\" x2=\"" << x1 << "\" y2=\""
           << fmt(y) << "\" stroke=\"#ddd\"/>\n";
        os << "<text x=\"" << x0 - 8 << "\" y=\"" << fmt(y + 4) << "\" text-anchor=\"end\" "
              "font-family=\"sans-serif\" font-size=\"11\">"
           << fmt(v) << "</text>\n";
    }
    if (!x_label.empty())
        os << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << y1 + 34
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << x_label
           << "</text>\n";
    if (!y_label.empty())
        os << "<text x=\"16\" y=\"" << (y0 + y1) / 2 << "\" text-anchor=\"middle\" "
              "font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 "
           << (y0 + y1) / 2 << ")\">" << y_label << "</text>\n";
}

void draw_legend(std::ostringstream& os, const std::vector<Series>& series, int x, int y) {
    for (std::size_t i = 0; i < series.size(); ++i) {
        const int yy = y + static_cast<int>(i) * 18;
        os << "<rect x=\"" << x << "\" y=\"" << yy - 9 << "\" width=\"12\" height=\"12\" fill=\""
           << kPalette[i % kPaletteSize] << "\"/>\n";
        os << "<text x=\"" << x + 18 << "\" y=\"" << yy + 2
           << "\" font-family=\"sans-serif\" font-size=\"11\">" << series[i].label
           << "</text>\n";
    }
}

void draw_series_lines(std::ostringstream& os, const std::vector<Series>& series, int x0, int y0,
                       int x1, int y1, const Range& range) {
    std::size_t n = 0;
    for (const Series& s : series) n = std::max(n, s.values.size());
    if (n < 1) return;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const Series& s = series[i];
        if (s.values.empty()) continue;
        os << "<polyline fill=\"none\" stroke=\"" << kPalette[i % kPaletteSize]
           << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < s.values.size(); ++k) {
            const double x =
                n > 1 ? x0 + (x1 - x0) * static_cast<double>(k) / (n - 1) : (x0 + x1) / 2.0;
            const double y =
                y1 - (y1 - y0) * (s.values[k] - range.lo) / (range.hi - range.lo);
            os << fmt(x) << ',' << fmt(y) << ' ';
        }
        os << "\"/>\n";
    }
}

} // namespace

std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<Series>& series,
                       const std::string& provenance) {
    const int height = 420;
    std::ostringstream os;
    open_svg(os, kWidth, height, title, provenance);
    const int x0 = kMarginLeft, y0 = kMarginTop, x1 = kWidth - kMarginRight,
              y1 = height - kMarginBottom;
    const Range range = value_range(series);
    draw_axes(os, x0, y0, x1, y1, range, x_label, y_label);
    draw_series_lines(os, series, x0, y0, x1, y1, range);
    draw_legend(os, series, x1 + 14, y0 + 12);
    os << "</svg>\n";
    return os.str();
}

std::string bar_chart(const std::string& title, const std::vector<std::string>& categories,
                      const std::vector<Series>& series, const std::string& provenance) {
    const int height = 420;
    std::ostringstream os;
    open_svg(os, kWidth, height, title, provenance);
    const int x0 = kMarginLeft, y0 = kMarginTop, x1 = kWidth - kMarginRight,
              y1 = height - kMarginBottom;
    const Range range = value_range(series);
    draw_axes(os, x0, y0, x1, y1, range, "", "EUR");

    const std::size_t n_groups = categories.size();
    const std::size_t n_series = series.size();
    const double group_w = (x1 - x0) / std::max<std::size_t>(1, n_groups);
    const double bar_w = group_w * 0.7 / std::max<std::size_t>(1, n_series);
    const double zero_y = y1 - (y1 - y0) * (0.0 - range.lo) / (range.hi - range.lo);
    for (std::size_t g = 0; g < n_groups; ++g) {
        for (std::size_t s = 0; s < n_series; ++s) {
            if (g >= series[s].values.size()) continue;
            const double v = series[s].values[g];
            const double x = x0 + group_w * g + group_w * 0.15 + bar_w * s;
            const double y = y1 - (y1 - y0) * (v - range.lo) / (range.hi - range.lo);
            const double top = std::min(y, zero_y);
            const double h = std::abs(zero_y - y);
            os << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(bar_w)
               << "\" height=\"" << fmt(h) << "\" fill=\"" << kPalette[s % kPaletteSize]
               << "\"/>\n";
        }
        os << "<text x=\"" << fmt(x0 + group_w * (g + 0.5)) << "\" y=\"" << y1 + 16
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
           << categories[g] << "</text>\n";
    }
    draw_legend(os, series, x1 + 14, y0 + 12);
    os << "</svg>\n";
    return os.str();
}

std::string panel_chart(const std::string& title, const std::vector<Panel>& panels,
                        const std::string& provenance) {
    const int panel_height = 220;
    const int height = kMarginTop + static_cast<int>(panels.size()) * panel_height + 20;
    std::ostringstream os;
    open_svg(os, kWidth, height, title, provenance);
    for (std::size_t p = 0; p < panels.size(); ++p) {
        const int top = kMarginTop + static_cast<int>(p) * panel_height;
        const int x0 = kMarginLeft, y0 = top + 24, x1 = kWidth - kMarginRight,
                  y1 = top + panel_height - 30;
        os << "<text x=\"" << x0 << "\" y=\"" << top + 14
           << "\" font-family=\"sans-serif\" font-size=\"12\" font-weight=\"bold\">"
           << panels[p].title << "</text>\n";
        const Range range = value_range(panels[p].series);
        draw_axes(os, x0, y0, x1, y1, range, p + 1 == panels.size() ? "hour of horizon" : "",
                  "");
        draw_series_lines(os, panels[p].series, x0, y0, x1, y1, range);
        draw_legend(os, panels[p].series, x1 + 14, y0 + 12);
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace recsizer::svg
