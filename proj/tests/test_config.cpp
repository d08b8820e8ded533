#include <doctest.h>

#include <algorithm>

#include "recsizer/errors.hpp"
#include "recsizer/io/config_io.hpp"
#include "recsizer/io/csv.hpp"
#include "recsizer/validation.hpp"

using namespace recsizer;

namespace {

RECConfig minimal_valid_config() {
    RECConfig c; // spec defaults everywhere
    c.participants.resize(2);
    c.participants[0].id = "a";
    c.participants[0].roof_area_m2 = 40.0;
    c.participants[1].id = "b";
    c.participants[1].roof_area_m2 = 25.0;
    return c;
}

bool has_code(const ValidationResult& r, IssueCode code) {
    return std::any_of(r.issues.begin(), r.issues.end(),
                       [&](const ValidationIssue& i) { return i.code == code; });
}

} // namespace

TEST_CASE("datasheet defaults are accepted unchanged") {
    const RECConfig c = minimal_valid_config();
    const ValidationResult r = validate_config(c);
    CHECK(r.ok());
    CHECK_NOTHROW(validated(c));
}

TEST_CASE("zero charge efficiency is rejected") {
    RECConfig c = minimal_valid_config();
    c.bess.eta_charge = 0.0;
    const ValidationResult r = validate_config(c);
    CHECK(!r.ok());
    CHECK(has_code(r, IssueCode::SocEfficiencyInvalid));
}

TEST_CASE("a one-participant community is rejected") {
    RECConfig c = minimal_valid_config();
    c.participants.resize(1);
    const ValidationResult r = validate_config(c);
    CHECK(has_code(r, IssueCode::SingleParticipantRec));
}

TEST_CASE("all violations are enumerated, not just the first") {
    RECConfig c = minimal_valid_config();
    c.participants.resize(1);
    c.bess.eta_charge = 1.5;
    c.bess.soc_min_kwh = 5.0; // above soc_max
    c.tariff.buy_f1_eur_kwh = -0.1;
    const ValidationResult r = validate_config(c);
    CHECK(r.issues.size() >= 4);
    CHECK(has_code(r, IssueCode::SingleParticipantRec));
    CHECK(has_code(r, IssueCode::SocEfficiencyInvalid));
    CHECK(has_code(r, IssueCode::SocBoundsInverted));
    CHECK(has_code(r, IssueCode::NegativeRate));
}

TEST_CASE("buy rate below sell rate is flagged") {
    RECConfig c = minimal_valid_config();
    c.tariff.sell_f2_eur_kwh = 0.5;
    CHECK(has_code(validate_config(c), IssueCode::BuyBelowSell));
}

TEST_CASE("validation is idempotent") {
    RECConfig c = minimal_valid_config();
    const ValidationResult once = validate_config(c);
    const ValidationResult twice = validate_config(c);
    CHECK(once.issues.size() == twice.issues.size());
    const RECConfig& v = validated(c);
    CHECK(validate_config(v).ok());
}

TEST_CASE("misaligned demand and weather series are flagged") {
    RECConfig c = minimal_valid_config();
    c.weather.irradiance_kw_m2.values.assign(48, 0.2);
    c.weather.ambient_c.values.assign(48, 15.0);
    c.participants[0].demand_kw.values.assign(24, 1.0);
    CHECK(has_code(validate_config(c), IssueCode::SeriesLengthMismatch));
}

TEST_CASE("config toml round-trip is identity") {
    RECConfig c = minimal_valid_config();
    c.pv.gamma_pct_per_c = 0.43; // overridden coefficient
    c.economics.max_payback = 12;
    c.economics.operating_from_year_one = true;
    c.tariff.holidays.push_back({2024, 12, 25});
    c.participants[0].demand_csv = "a.csv";
    c.participants[0].annual_bill_eur = 700.0;

    const std::string text = config_to_toml(c);
    const RECConfig back = config_from_toml(text);
    CHECK(back.pv.gamma_pct_per_c == c.pv.gamma_pct_per_c);
    CHECK(back.pv.rated_kw == c.pv.rated_kw);
    CHECK(back.bess.capacity_kwh == c.bess.capacity_kwh);
    CHECK(back.bess.max_units == c.bess.max_units);
    CHECK(back.tariff.buy_f1_eur_kwh == c.tariff.buy_f1_eur_kwh);
    CHECK(back.tariff.holidays == c.tariff.holidays);
    CHECK(back.economics.discount_rate == c.economics.discount_rate);
    CHECK(back.economics.max_payback == c.economics.max_payback);
    CHECK(back.economics.operating_from_year_one == c.economics.operating_from_year_one);
    CHECK(back.participants.size() == c.participants.size());
    CHECK(back.participants[0].id == c.participants[0].id);
    CHECK(back.participants[0].demand_csv == c.participants[0].demand_csv);
    CHECK(back.participants[0].annual_bill_eur == c.participants[0].annual_bill_eur);
    // Serialized form reparses to the same serialized form.
    CHECK(config_to_toml(back) == text);
}

TEST_CASE("discount rate is mandatory in config files") {
    CHECK_THROWS_AS(config_from_toml("[economics]\nhorizon_years = 25\n"), ParseError);
    CHECK_NOTHROW(config_from_toml("[economics]\ndiscount_rate = 0.03\n"));
}

TEST_CASE("csv parser enforces schema and uniform steps") {
    const std::string good = "timestamp,value\n"
                             "2023-01-01T00:00:00,1.5\n"
                             "2023-01-01T01:00:00,2.0\n"
                             "2023-01-01T02:00:00,0.5\n";
    const CsvTable t = parse_timeseries_csv(good, "test");
    CHECK(t.rows() == 3);
    CHECK(t.step_hours == 1.0);
    const TimeSeries s = single_series(t, "test");
    CHECK(s.values[1] == 2.0);

    CHECK_THROWS_AS(parse_timeseries_csv("value\n1\n", "test"), ParseError);
    CHECK_THROWS_AS(parse_timeseries_csv("timestamp,value\n2023-01-01T00:00:00,x\n", "test"),
                    ParseError);
    const std::string gap = "timestamp,value\n"
                            "2023-01-01T00:00:00,1\n"
                            "2023-01-01T01:00:00,1\n"
                            "2023-01-01T03:00:00,1\n";
    CHECK_THROWS_AS(parse_timeseries_csv(gap, "test"), ParseError);
}

TEST_CASE("wide csv with several named columns") {
    const std::string text = "timestamp,irradiance_kw_m2,ambient_c\n"
                             "2023-01-01T00:00:00,0.0,5.0\n"
                             "2023-01-01T01:00:00,0.1,6.0\n";
    const CsvTable t = parse_timeseries_csv(text, "weather");
    CHECK(t.names.size() == 2);
    CHECK(column_series(t, "ambient_c").values[1] == 6.0);
    CHECK_THROWS_AS(column_series(t, "missing"), ParseError);
}
