#include "recsizer/tariff.hpp"

#include <algorithm>

#include "recsizer/errors.hpp"

namespace recsizer {

std::vector<HourLabel> day_hours(const CivilDate& date) {
    std::vector<HourLabel> hours;
    hours.reserve(24);
    for (int h = 1; h <= 24; ++h) hours.push_back({date, h});
    return hours;
}

const char* to_string(Band b) {
    switch (b) {
        case Band::F1: return "F1";
        case Band::F2: return "F2";
        case Band::F3: return "F3";
    }
    return "?";
}

Band band_of(Weekday day, int hour) {
    if (hour < 1 || hour > 24) throw DomainError("band_of: hour must be in 1..24");
    if (day == Weekday::Sun) return Band::F3;
    if (hour <= 7 || hour == 24) return Band::F3;
    if (day == Weekday::Sat) return Band::F2; // 8..23
    if (hour >= 9 && hour <= 19) return Band::F1;
    return Band::F2; // 8, 20..23
}

Band band_at(const HourLabel& label, const std::vector<CivilDate>& holidays) {
    if (std::find(holidays.begin(), holidays.end(), label.date) != holidays.end())
        return Band::F3;
    return band_of(weekday_of(label.date), label.hour);
}

double rate_for(const TariffSchedule& schedule, RateKind kind, Band band) {
    if (kind == RateKind::Buy) {
        switch (band) {
            case Band::F1: return schedule.buy_f1_eur_kwh;
            case Band::F2: return schedule.buy_f2_eur_kwh;
            case Band::F3: return schedule.buy_f3_eur_kwh;
        }
    } else {
        switch (band) {
            case Band::F1: return schedule.sell_f1_eur_kwh;
            case Band::F2: return schedule.sell_f2_eur_kwh;
            case Band::F3: return schedule.sell_f3_eur_kwh;
        }
    }
    throw DomainError("rate_for: invalid band");
}

std::vector<double> rate_series(const TariffSchedule& schedule, RateKind kind,
                                const std::vector<HourLabel>& span) {
    std::vector<double> rates;
    rates.reserve(span.size());
    for (const HourLabel& label : span)
        rates.push_back(rate_for(schedule, kind, band_at(label, schedule.holidays)));
    return rates;
}

std::vector<CashFlowComponents> period_cashflow(const DispatchSolution& dispatch,
                                                const TariffSchedule& schedule) {
    const std::size_t steps = dispatch.hours.size();
    if (dispatch.shared_kw.size() != steps)
        throw SeriesMismatchError("period_cashflow: shared series length mismatch");

    const std::vector<double> buy = rate_series(schedule, RateKind::Buy, dispatch.hours);
    const std::vector<double> sell = rate_series(schedule, RateKind::Sell, dispatch.hours);
    const double dt = dispatch.dt_hours;

    double i_sh = 0.0;
    for (std::size_t t = 0; t < steps; ++t) {
        if (dispatch.shared_kw[t] < 0.0)
            throw DomainError("period_cashflow: negative shared power");
        i_sh += (schedule.share_eur_kwh + schedule.transmission_eur_kwh) *
                dispatch.shared_kw[t] * dt;
    }

    std::vector<CashFlowComponents> components(dispatch.participants.size());
    for (std::size_t n = 0; n < dispatch.participants.size(); ++n) {
        const ParticipantDispatch& p = dispatch.participants[n];
        if (p.p_sell_kw.size() != steps || p.p_self_kw.size() != steps)
            throw SeriesMismatchError("period_cashflow: participant series length mismatch");
        CashFlowComponents& c = components[n];
        for (std::size_t t = 0; t < steps; ++t) {
            if (p.p_sell_kw[t] < 0.0 || p.p_self_kw[t] < 0.0)
                throw DomainError("period_cashflow: negative power flow");
            c.r_sell_eur += sell[t] * p.p_sell_kw[t] * dt;
            c.r_self_eur += buy[t] * p.p_self_kw[t] * dt;
        }
        c.i_sh_eur = i_sh;
    }
    return components;
}

} // namespace recsizer
