#include "recsizer/io/config_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "recsizer/errors.hpp"
#include "recsizer/io/csv.hpp"
#include "recsizer/io/toml.hpp"

namespace recsizer {

namespace {

double num(const toml::Value& t, const std::string& key, double fallback) {
    const toml::Value* v = t.find(key);
    return v ? v->as_number(key) : fallback;
}

int integer(const toml::Value& t, const std::string& key, int fallback) {
    const toml::Value* v = t.find(key);
    return v ? v->as_int(key) : fallback;
}

} // namespace

RECConfig config_from_toml(const std::string& text) {
    const toml::Value root = toml::parse(text);
    RECConfig config;

    if (const toml::Value* pv = root.find("pv")) {
        PVSpec& s = config.pv;
        s.rated_kw = num(*pv, "rated_kw", s.rated_kw);
        s.panel_area_m2 = num(*pv, "panel_area_m2", s.panel_area_m2);
        s.lifespan_years = num(*pv, "lifespan_years", s.lifespan_years);
        s.gamma_pct_per_c = num(*pv, "gamma_pct_per_c", s.gamma_pct_per_c);
        s.cost_per_kw_eur = num(*pv, "cost_per_kw_eur", s.cost_per_kw_eur);
        s.stc_irradiance_kw_m2 = num(*pv, "stc_irradiance_kw_m2", s.stc_irradiance_kw_m2);
        s.stc_temp_c = num(*pv, "stc_temp_c", s.stc_temp_c);
        s.noct_c = num(*pv, "noct_c", s.noct_c);
        s.opex_per_kw_year_eur = num(*pv, "opex_per_kw_year_eur", s.opex_per_kw_year_eur);
        s.ca_per_kw_year_eur = num(*pv, "ca_per_kw_year_eur", s.ca_per_kw_year_eur);
    }
    if (const toml::Value* b = root.find("bess")) {
        BESSSpec& s = config.bess;
        s.capacity_kwh = num(*b, "capacity_kwh", s.capacity_kwh);
        s.eta_charge = num(*b, "eta_charge", s.eta_charge);
        s.eta_discharge = num(*b, "eta_discharge", s.eta_discharge);
        s.p_charge_max_kw = num(*b, "p_charge_max_kw", s.p_charge_max_kw);
        s.p_discharge_max_kw = num(*b, "p_discharge_max_kw", s.p_discharge_max_kw);
        s.soc_min_kwh = num(*b, "soc_min_kwh", s.soc_min_kwh);
        s.soc_max_kwh = num(*b, "soc_max_kwh", s.soc_max_kwh);
        s.cost_per_kwh_eur = num(*b, "cost_per_kwh_eur", s.cost_per_kwh_eur);
        s.lifespan_years = integer(*b, "lifespan_years", s.lifespan_years);
        s.opex_per_kwh_year_eur = num(*b, "opex_per_kwh_year_eur", s.opex_per_kwh_year_eur);
        s.ca_per_kwh_year_eur = num(*b, "ca_per_kwh_year_eur", s.ca_per_kwh_year_eur);
        s.max_units = integer(*b, "max_units", s.max_units);
    }
    if (const toml::Value* t = root.find("tariff")) {
        TariffSchedule& s = config.tariff;
        s.buy_f1_eur_kwh = num(*t, "buy_f1_eur_kwh", s.buy_f1_eur_kwh);
        s.buy_f2_eur_kwh = num(*t, "buy_f2_eur_kwh", s.buy_f2_eur_kwh);
        s.buy_f3_eur_kwh = num(*t, "buy_f3_eur_kwh", s.buy_f3_eur_kwh);
        s.sell_f1_eur_kwh = num(*t, "sell_f1_eur_kwh", s.sell_f1_eur_kwh);
        s.sell_f2_eur_kwh = num(*t, "sell_f2_eur_kwh", s.sell_f2_eur_kwh);
        s.sell_f3_eur_kwh = num(*t, "sell_f3_eur_kwh", s.sell_f3_eur_kwh);
        s.share_eur_kwh = num(*t, "share_eur_kwh", s.share_eur_kwh);
        s.transmission_eur_kwh = num(*t, "transmission_eur_kwh", s.transmission_eur_kwh);
        if (const toml::Value* holidays = t->find("holidays")) {
            for (const toml::Value& d : holidays->array)
                s.holidays.push_back(parse_date(d.as_string("tariff.holidays")));
        }
    }
    {
        const toml::Value* e = root.find("economics");
        if (!e || !e->has("discount_rate"))
            throw ParseError("config: economics.discount_rate is required");
        EconomicParams& s = config.economics;
        s.discount_rate = e->at("discount_rate").as_number("economics.discount_rate");
        s.horizon_years = integer(*e, "horizon_years", s.horizon_years);
        s.season_days = integer(*e, "season_days", s.season_days);
        if (e->has("max_payback")) s.max_payback = e->at("max_payback").as_int("max_payback");
        if (e->has("operating_from_year_one"))
            s.operating_from_year_one =
                e->at("operating_from_year_one").as_boolean("operating_from_year_one");
    }
    if (const toml::Value* w = root.find("weather")) {
        if (w->has("irradiance_csv"))
            config.weather.irradiance_csv = w->at("irradiance_csv").as_string("irradiance_csv");
        if (w->has("ambient_csv"))
            config.weather.ambient_csv = w->at("ambient_csv").as_string("ambient_csv");
    }
    if (const toml::Value* parts = root.find("participants")) {
        if (parts->kind != toml::Value::Kind::Array)
            throw ParseError("config: participants must be an array of tables");
        for (const toml::Value& p : parts->array) {
            ParticipantSpec spec;
            spec.id = p.at("id").as_string("participants.id");
            spec.roof_area_m2 = num(p, "roof_area_m2", 0.0);
            spec.annual_bill_eur = num(p, "annual_bill_eur", 0.0);
            if (p.has("demand_csv")) spec.demand_csv = p.at("demand_csv").as_string("demand_csv");
            config.participants.push_back(std::move(spec));
        }
    }
    return config;
}

std::string config_to_toml(const RECConfig& config) {
    using toml::Value;
    Value root = Value::make_table();

    Value pv = Value::make_table();
    pv.set("rated_kw", Value::make_number(config.pv.rated_kw));
    pv.set("panel_area_m2", Value::make_number(config.pv.panel_area_m2));
    pv.set("lifespan_years", Value::make_number(config.pv.lifespan_years));
    pv.set("gamma_pct_per_c", Value::make_number(config.pv.gamma_pct_per_c));
    pv.set("cost_per_kw_eur", Value::make_number(config.pv.cost_per_kw_eur));
    pv.set("stc_irradiance_kw_m2", Value::make_number(config.pv.stc_irradiance_kw_m2));
    pv.set("stc_temp_c", Value::make_number(config.pv.stc_temp_c));
    pv.set("noct_c", Value::make_number(config.pv.noct_c));
    pv.set("opex_per_kw_year_eur", Value::make_number(config.pv.opex_per_kw_year_eur));
    pv.set("ca_per_kw_year_eur", Value::make_number(config.pv.ca_per_kw_year_eur));
    root.set("pv", std::move(pv));

    Value bess = Value::make_table();
    bess.set("capacity_kwh", Value::make_number(config.bess.capacity_kwh));
    bess.set("eta_charge", Value::make_number(config.bess.eta_charge));
    bess.set("eta_discharge", Value::make_number(config.bess.eta_discharge));
    bess.set("p_charge_max_kw", Value::make_number(config.bess.p_charge_max_kw));
    bess.set("p_discharge_max_kw", Value::make_number(config.bess.p_discharge_max_kw));
    bess.set("soc_min_kwh", Value::make_number(config.bess.soc_min_kwh));
    bess.set("soc_max_kwh", Value::make_number(config.bess.soc_max_kwh));
    bess.set("cost_per_kwh_eur", Value::make_number(config.bess.cost_per_kwh_eur));
    bess.set("lifespan_years", Value::make_number(config.bess.lifespan_years));
    bess.set("opex_per_kwh_year_eur", Value::make_number(config.bess.opex_per_kwh_year_eur));
    bess.set("ca_per_kwh_year_eur", Value::make_number(config.bess.ca_per_kwh_year_eur));
    bess.set("max_units", Value::make_number(config.bess.max_units));
    root.set("bess", std::move(bess));

    Value tariff = Value::make_table();
    tariff.set("buy_f1_eur_kwh", Value::make_number(config.tariff.buy_f1_eur_kwh));
    tariff.set("buy_f2_eur_kwh", Value::make_number(config.tariff.buy_f2_eur_kwh));
    tariff.set("buy_f3_eur_kwh", Value::make_number(config.tariff.buy_f3_eur_kwh));
    tariff.set("sell_f1_eur_kwh", Value::make_number(config.tariff.sell_f1_eur_kwh));
    tariff.set("sell_f2_eur_kwh", Value::make_number(config.tariff.sell_f2_eur_kwh));
    tariff.set("sell_f3_eur_kwh", Value::make_number(config.tariff.sell_f3_eur_kwh));
    tariff.set("share_eur_kwh", Value::make_number(config.tariff.share_eur_kwh));
    tariff.set("transmission_eur_kwh", Value::make_number(config.tariff.transmission_eur_kwh));
    if (!config.tariff.holidays.empty()) {
        Value holidays = Value::make_array();
        for (const CivilDate& d : config.tariff.holidays)
            holidays.array.push_back(Value::make_string(format_date(d)));
        tariff.set("holidays", std::move(holidays));
    }
    root.set("tariff", std::move(tariff));

    Value econ = Value::make_table();
    econ.set("discount_rate", Value::make_number(config.economics.discount_rate));
    econ.set("horizon_years", Value::make_number(config.economics.horizon_years));
    econ.set("season_days", Value::make_number(config.economics.season_days));
    if (config.economics.max_payback)
        econ.set("max_payback", Value::make_number(*config.economics.max_payback));
    econ.set("operating_from_year_one",
             Value::make_boolean(config.economics.operating_from_year_one));
    root.set("economics", std::move(econ));

    Value weather = Value::make_table();
    if (!config.weather.irradiance_csv.empty())
        weather.set("irradiance_csv", Value::make_string(config.weather.irradiance_csv));
    if (!config.weather.ambient_csv.empty())
        weather.set("ambient_csv", Value::make_string(config.weather.ambient_csv));
    root.set("weather", std::move(weather));

    Value parts = Value::make_array();
    for (const ParticipantSpec& p : config.participants) {
        Value item = Value::make_table();
        item.set("id", Value::make_string(p.id));
        item.set("roof_area_m2", Value::make_number(p.roof_area_m2));
        item.set("annual_bill_eur", Value::make_number(p.annual_bill_eur));
        if (!p.demand_csv.empty()) item.set("demand_csv", Value::make_string(p.demand_csv));
        parts.array.push_back(std::move(item));
    }
    root.set("participants", std::move(parts));

    return toml::write(root);
}

RECConfig load_config(const std::string& path, bool load_series) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    RECConfig config = config_from_toml(buffer.str());

    if (load_series) {
        const std::filesystem::path base = std::filesystem::path(path).parent_path();
        auto resolve = [&](const std::string& rel) {
            const std::filesystem::path p(rel);
            return (p.is_absolute() ? p : base / p).string();
        };
        if (!config.weather.irradiance_csv.empty()) {
            const CsvTable t = read_timeseries_csv(resolve(config.weather.irradiance_csv));
            config.weather.irradiance_kw_m2 =
                t.names.size() == 1 ? single_series(t, "irradiance")
                                    : column_series(t, "irradiance_kw_m2");
            if (t.names.size() > 1) config.weather.ambient_c = column_series(t, "ambient_c");
        }
        if (!config.weather.ambient_csv.empty() && config.weather.ambient_c.empty()) {
            const CsvTable t = read_timeseries_csv(resolve(config.weather.ambient_csv));
            config.weather.ambient_c = single_series(t, "ambient");
        }
        for (ParticipantSpec& p : config.participants) {
            if (p.demand_csv.empty()) continue;
            const CsvTable t = read_timeseries_csv(resolve(p.demand_csv));
            p.demand_kw = single_series(t, p.id + " demand");
        }
    }
    return config;
}

} // namespace recsizer
