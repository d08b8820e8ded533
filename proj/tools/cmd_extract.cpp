#include <future>
#include <iostream>
#include <vector>

#include "commands.hpp"
#include "recsizer/errors.hpp"
#include "recsizer/io/csv.hpp"
#include "recsizer/io/json_io.hpp"
#include "recsizer/log.hpp"
#include "recsizer/signal/repdays.hpp"

namespace recsizer::cli {

int cmd_extract(const ExtractArgs& args) {
    try {
        const CsvTable loads = read_timeseries_csv(args.input_csv);
        const CsvTable weather = read_timeseries_csv(args.weather_csv);

        TimeSeries irradiance, ambient;
        if (weather.names.size() == 1) {
            throw ParseError(args.weather_csv +
                             ": weather needs irradiance_kw_m2 and ambient_c columns");
        }
        irradiance = column_series(weather, "irradiance_kw_m2");
        ambient = column_series(weather, "ambient_c");

        const double span_hours = loads.step_hours * static_cast<double>(loads.rows());
        if (span_hours < 365.0 * 24.0)
            throw InsufficientDataError(args.input_csv + ": need at least one year of data");

        FitOptions options;
        options.regressors.n_yearly = args.n_yearly;
        options.regressors.n_weekly = args.n_weekly;
        options.regressors.n_daily = args.n_daily;
        if (args.lambda == "auto") {
            options.cross_validate = true;
        } else if (args.lambda != "default") {
            try {
                options.lambda = std::stod(args.lambda);
            } catch (const std::exception&) {
                throw ParseError("--lambda expects 'auto' or a number, got " + args.lambda);
            }
            if (*options.lambda < 0.0) throw ParseError("--lambda must be >= 0");
        }

        RepDaysFile out;
        out.weather = weather_rep_days(irradiance, ambient);

        // Fit participants in parallel; each series is independent.
        std::vector<std::future<std::pair<std::string, RepresentativeDays>>> futures;
        for (std::size_t c = 0; c < loads.names.size(); ++c) {
            futures.push_back(std::async(std::launch::async, [&, c] {
                const TimeSeries series = column_series(loads, loads.names[c]);
                const SeasonalModel model = fit_seasonal_model(series, options);
                if (!model.converged)
                    REC_LOG_ERROR("fit for " << loads.names[c]
                                             << " hit the iteration cap; using best iterate");
                REC_LOG_INFO("fitted " << loads.names[c] << " with lambda=" << model.lambda);
                return std::make_pair(loads.names[c], representative_days(model));
            }));
        }
        for (auto& f : futures) {
            auto [id, days] = f.get();
            out.participants[id] = days;
        }

        // One date set labels the whole file; the load days drive it.
        if (!out.participants.empty()) {
            out.weather.irradiance_kw_m2.dates = out.participants.begin()->second.dates;
            out.weather.ambient_c.dates = out.participants.begin()->second.dates;
        }

        out.manifest = RunManifest::make("extract");
        out.manifest.input_hashes[args.input_csv] = hash_file(args.input_csv);
        out.manifest.input_hashes[args.weather_csv] = hash_file(args.weather_csv);
        write_json_file(args.output_json, to_json(out));
        std::cout << "wrote " << args.output_json << " (" << out.participants.size()
                  << " participants)\n";
        return kExitOk;
    } catch (const InsufficientDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitShortData;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    }
}

} // namespace recsizer::cli
