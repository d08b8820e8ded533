#include "recsizer/io/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "recsizer/errors.hpp"

namespace recsizer {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) {
        // Trim spaces and a trailing CR.
        while (!field.empty() && (field.back() == ' ' || field.back() == '\r')) field.pop_back();
        std::size_t lead = 0;
        while (lead < field.size() && field[lead] == ' ') ++lead;
        fields.push_back(field.substr(lead));
    }
    return fields;
}

} // namespace

CsvTable parse_timeseries_csv(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(origin + ": empty file");
    const std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 2 || header[0] != "timestamp")
        throw ParseError(origin + ": header must be 'timestamp,<name>[,...]'");

    CsvTable table;
    table.names.assign(header.begin() + 1, header.end());
    table.columns.resize(table.names.size());

    std::int64_t prev_hour = 0;
    std::int64_t step = 0;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw ParseError(origin + ": row " + std::to_string(row + 2) + " has " +
                             std::to_string(fields.size()) + " fields, expected " +
                             std::to_string(header.size()));
        const CivilTime stamp = parse_timestamp(fields[0]);
        const std::int64_t hour = hours_from_civil(stamp);
        if (row == 0) {
            table.start = stamp;
        } else if (row == 1) {
            step = hour - prev_hour;
            if (step <= 0) throw ParseError(origin + ": timestamps must strictly increase");
        } else if (hour - prev_hour != step) {
            throw ParseError(origin + ": non-uniform timestamp step at row " +
                             std::to_string(row + 2));
        }
        prev_hour = hour;
        for (std::size_t c = 0; c < table.names.size(); ++c) {
            try {
                std::size_t used = 0;
                const double v = std::stod(fields[c + 1], &used);
                if (used != fields[c + 1].size()) throw std::invalid_argument("trailing junk");
                table.columns[c].push_back(v);
            } catch (const std::exception&) {
                throw ParseError(origin + ": bad number '" + fields[c + 1] + "' at row " +
                                 std::to_string(row + 2));
            }
        }
        ++row;
    }
    if (row == 0) throw ParseError(origin + ": no data rows");
    table.step_hours = row > 1 ? static_cast<double>(step) : 1.0;
    return table;
}

CsvTable read_timeseries_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_timeseries_csv(buffer.str(), path);
}

TimeSeries column_series(const CsvTable& table, const std::string& name) {
    for (std::size_t c = 0; c < table.names.size(); ++c) {
        if (table.names[c] == name) {
            TimeSeries s;
            s.start = table.start;
            s.step_hours = table.step_hours;
            s.values = table.columns[c];
            return s;
        }
    }
    throw ParseError("csv column not found: " + name);
}

TimeSeries single_series(const CsvTable& table, const std::string& origin) {
    if (table.names.size() != 1)
        throw ParseError(origin + ": expected a single value column, found " +
                         std::to_string(table.names.size()));
    return column_series(table, table.names[0]);
}

void write_timeseries_csv(const std::string& path, const std::vector<std::string>& names,
                          const std::vector<const TimeSeries*>& series) {
    if (names.size() != series.size() || series.empty())
        throw StructureError("write_timeseries_csv: names/series mismatch");
    for (const TimeSeries* s : series) require_aligned(*series.front(), *s, "csv write");

    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot open for writing");
    out << "timestamp";
    for (const std::string& n : names) out << ',' << n;
    out << "\n";
    char buf[32];
    for (std::size_t i = 0; i < series.front()->size(); ++i) {
        out << format_timestamp(series.front()->timestamp_at(i));
        for (const TimeSeries* s : series) {
            std::snprintf(buf, sizeof buf, "%.10g", s->values[i]);
            out << ',' << buf;
        }
        out << "\n";
    }
}

} // namespace recsizer
