#pragma once

#include <string>
#include <vector>

namespace recsizer::svg {

struct Series {
    std::string label;
    std::vector<double> values;
};

/// Multi-series line chart over a shared x index (0..n-1).
std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label, const std::vector<Series>& series,
                       const std::string& provenance);

/// Grouped bar chart: one group per category, one bar per series.
std::string bar_chart(const std::string& title, const std::vector<std::string>& categories,
                      const std::vector<Series>& series, const std::string& provenance);

/// Several stacked line-chart panels sharing the x axis.
struct Panel {
    std::string title;
    std::vector<Series> series;
};
std::string panel_chart(const std::string& title, const std::vector<Panel>& panels,
                        const std::string& provenance);

} // namespace recsizer::svg
