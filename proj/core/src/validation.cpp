#include "recsizer/validation.hpp"

#include <cmath>
#include <sstream>

#include "recsizer/errors.hpp"

namespace recsizer {

const char* to_string(IssueCode code) {
    switch (code) {
        case IssueCode::NegativeRate: return "negative_rate";
        case IssueCode::BuyBelowSell: return "buy_below_sell";
        case IssueCode::SocEfficiencyInvalid: return "soc_efficiency_invalid";
        case IssueCode::SocBoundsInverted: return "soc_bounds_inverted";
        case IssueCode::NonPositiveValue: return "non_positive_value";
        case IssueCode::NegativeValue: return "negative_value";
        case IssueCode::SingleParticipantRec: return "single_participant_rec";
        case IssueCode::SeriesLengthMismatch: return "series_length_mismatch";
        case IssueCode::SeriesInvalid: return "series_invalid";
        case IssueCode::NonIntegerInvalid: return "non_integer_invalid";
    }
    return "unknown";
}

std::string ValidationResult::summary() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < issues.size(); ++i) {
        if (i) os << "; ";
        os << to_string(issues[i].code) << " (" << issues[i].field << "): "
           << issues[i].message;
    }
    return os.str();
}

namespace {

class Checker {
public:
    explicit Checker(std::vector<ValidationIssue>& out) : out_(out) {}

    void positive(double v, const std::string& field) {
        if (!(v > 0.0) || !std::isfinite(v))
            add(IssueCode::NonPositiveValue, field, "must be > 0");
    }
    void nonnegative(double v, const std::string& field) {
        if (v < 0.0 || !std::isfinite(v)) add(IssueCode::NegativeValue, field, "must be >= 0");
    }
    void rate(double v, const std::string& field) {
        if (v < 0.0 || !std::isfinite(v)) add(IssueCode::NegativeRate, field, "must be >= 0");
    }
    void add(IssueCode code, const std::string& field, const std::string& msg) {
        out_.push_back({code, field, msg});
    }

private:
    std::vector<ValidationIssue>& out_;
};

void check_series(Checker& c, const TimeSeries& s, const std::string& field) {
    if (s.empty()) {
        c.add(IssueCode::SeriesInvalid, field, "series is empty");
        return;
    }
    try {
        s.check_nonnegative(field);
    } catch (const DomainError& e) {
        c.add(IssueCode::SeriesInvalid, field, e.what());
    }
}

} // namespace

ValidationResult validate_config(const RECConfig& config) {
    ValidationResult result;
    Checker c(result.issues);

    if (config.participants.size() < 2)
        c.add(IssueCode::SingleParticipantRec, "participants",
              "a community requires at least two participants");

    const PVSpec& pv = config.pv;
    c.positive(pv.rated_kw, "pv.rated_kw");
    c.positive(pv.panel_area_m2, "pv.panel_area_m2");
    c.positive(pv.lifespan_years, "pv.lifespan_years");
    c.positive(pv.gamma_pct_per_c, "pv.gamma_pct_per_c");
    c.positive(pv.cost_per_kw_eur, "pv.cost_per_kw_eur");
    c.positive(pv.stc_irradiance_kw_m2, "pv.stc_irradiance_kw_m2");
    c.positive(pv.stc_temp_c, "pv.stc_temp_c");
    c.positive(pv.noct_c, "pv.noct_c");
    c.positive(pv.opex_per_kw_year_eur, "pv.opex_per_kw_year_eur");
    c.positive(pv.ca_per_kw_year_eur, "pv.ca_per_kw_year_eur");

    const BESSSpec& b = config.bess;
    c.positive(b.capacity_kwh, "bess.capacity_kwh");
    if (!(b.eta_charge > 0.0 && b.eta_charge <= 1.0))
        c.add(IssueCode::SocEfficiencyInvalid, "bess.eta_charge", "must satisfy 0 < eta <= 1");
    if (!(b.eta_discharge > 0.0 && b.eta_discharge <= 1.0))
        c.add(IssueCode::SocEfficiencyInvalid, "bess.eta_discharge", "must satisfy 0 < eta <= 1");
    c.positive(b.p_charge_max_kw, "bess.p_charge_max_kw");
    c.positive(b.p_discharge_max_kw, "bess.p_discharge_max_kw");
    if (!(b.soc_min_kwh >= 0.0 && b.soc_min_kwh < b.soc_max_kwh && b.soc_max_kwh <= b.capacity_kwh))
        c.add(IssueCode::SocBoundsInverted, "bess.soc_min_kwh/soc_max_kwh",
              "must satisfy 0 <= soc_min < soc_max <= capacity");
    c.positive(b.cost_per_kwh_eur, "bess.cost_per_kwh_eur");
    if (b.lifespan_years < 1)
        c.add(IssueCode::NonPositiveValue, "bess.lifespan_years", "must be >= 1");
    c.positive(b.opex_per_kwh_year_eur, "bess.opex_per_kwh_year_eur");
    c.positive(b.ca_per_kwh_year_eur, "bess.ca_per_kwh_year_eur");
    if (b.max_units < 0)
        c.add(IssueCode::NegativeValue, "bess.max_units", "must be >= 0");

    const TariffSchedule& t = config.tariff;
    c.rate(t.buy_f1_eur_kwh, "tariff.buy_f1_eur_kwh");
    c.rate(t.buy_f2_eur_kwh, "tariff.buy_f2_eur_kwh");
    c.rate(t.buy_f3_eur_kwh, "tariff.buy_f3_eur_kwh");
    c.rate(t.sell_f1_eur_kwh, "tariff.sell_f1_eur_kwh");
    c.rate(t.sell_f2_eur_kwh, "tariff.sell_f2_eur_kwh");
    c.rate(t.sell_f3_eur_kwh, "tariff.sell_f3_eur_kwh");
    c.rate(t.share_eur_kwh, "tariff.share_eur_kwh");
    c.rate(t.transmission_eur_kwh, "tariff.transmission_eur_kwh");
    if (t.buy_f1_eur_kwh < t.sell_f1_eur_kwh)
        c.add(IssueCode::BuyBelowSell, "tariff.f1", "purchase rate must be >= selling rate");
    if (t.buy_f2_eur_kwh < t.sell_f2_eur_kwh)
        c.add(IssueCode::BuyBelowSell, "tariff.f2", "purchase rate must be >= selling rate");
    if (t.buy_f3_eur_kwh < t.sell_f3_eur_kwh)
        c.add(IssueCode::BuyBelowSell, "tariff.f3", "purchase rate must be >= selling rate");

    const EconomicParams& e = config.economics;
    c.nonnegative(e.discount_rate, "economics.discount_rate");
    if (e.horizon_years < 1)
        c.add(IssueCode::NonPositiveValue, "economics.horizon_years", "must be >= 1");
    if (e.season_days < 1)
        c.add(IssueCode::NonPositiveValue, "economics.season_days", "must be >= 1");
    if (e.max_payback && *e.max_payback < 0)
        c.add(IssueCode::NegativeValue, "economics.max_payback", "must be >= 0");

    for (const ParticipantSpec& p : config.participants) {
        const std::string prefix = "participants." + p.id;
        c.nonnegative(p.roof_area_m2, prefix + ".roof_area_m2");
        c.nonnegative(p.annual_bill_eur, prefix + ".annual_bill_eur");
        if (!p.demand_kw.empty()) check_series(c, p.demand_kw, prefix + ".demand");
    }

    const bool have_weather =
        !config.weather.irradiance_kw_m2.empty() || !config.weather.ambient_c.empty();
    if (have_weather) {
        check_series(c, config.weather.irradiance_kw_m2, "weather.irradiance");
        if (config.weather.ambient_c.empty()) {
            c.add(IssueCode::SeriesInvalid, "weather.ambient", "series is empty");
        } else {
            try {
                config.weather.ambient_c.check_valid("weather.ambient"); // may be negative degC
            } catch (const DomainError& err) {
                c.add(IssueCode::SeriesInvalid, "weather.ambient", err.what());
            }
            if (!aligned(config.weather.irradiance_kw_m2, config.weather.ambient_c))
                c.add(IssueCode::SeriesLengthMismatch, "weather",
                      "irradiance and ambient series must be aligned");
        }
        for (const ParticipantSpec& p : config.participants) {
            if (!p.demand_kw.empty() && !config.weather.irradiance_kw_m2.empty() &&
                !aligned(p.demand_kw, config.weather.irradiance_kw_m2))
                c.add(IssueCode::SeriesLengthMismatch, "participants." + p.id + ".demand",
                      "demand and weather series must cover a common span");
        }
    }

    return result;
}

const RECConfig& validated(const RECConfig& config) {
    ValidationResult r = validate_config(config);
    if (!r.ok()) throw DomainError("invalid configuration: " + r.summary());
    return config;
}

} // namespace recsizer
