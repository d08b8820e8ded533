#pragma once

#include <string>
#include <vector>

#include "recsizer/timeseries.hpp"

namespace recsizer {

/// An hourly CSV table: header `timestamp,<name>[,<name>...]`, ISO-8601
/// timestamps on a uniform grid, plain decimal numbers.
struct CsvTable {
    CivilTime start{};
    double step_hours = 1.0;
    std::vector<std::string> names;                // column names after "timestamp"
    std::vector<std::vector<double>> columns;      // one vector per name
    std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

CsvTable read_timeseries_csv(const std::string& path);
CsvTable parse_timeseries_csv(const std::string& text, const std::string& origin);

/// Column by name; throws ParseError when absent.
TimeSeries column_series(const CsvTable& table, const std::string& name);
/// Single-column convenience (the table must have exactly one value column).
TimeSeries single_series(const CsvTable& table, const std::string& origin);

void write_timeseries_csv(const std::string& path, const std::vector<std::string>& names,
                          const std::vector<const TimeSeries*>& series);

} // namespace recsizer
