#include <doctest.h>

#include <random>

#include "recsizer/errors.hpp"
#include "recsizer/pv.hpp"

using namespace recsizer;
using doctest::Approx;

namespace {
const PVSpec kSpec; // datasheet defaults
}

TEST_CASE("cell temperature follows the linear NOCT model") {
    CHECK(cell_temperature(0.0, 10.0, kSpec) == Approx(10.0));
    CHECK(cell_temperature(1.0, 20.0, kSpec) == Approx(40.0));
    CHECK(cell_temperature(0.8, 20.0, kSpec) == Approx(36.0));
    CHECK_THROWS_AS(cell_temperature(-0.1, 20.0, kSpec), DomainError);
}

TEST_CASE("panel power at reference and derated points") {
    // At standard test conditions the panel delivers its rating.
    CHECK(panel_power_kw(kSpec.stc_irradiance_kw_m2, kSpec.stc_temp_c, kSpec) == Approx(0.43));
    CHECK(panel_power_kw(0.0, 25.0, kSpec) == Approx(0.0));
    CHECK(panel_power_kw(0.8, 36.0, kSpec) == Approx(0.34237288).epsilon(1e-8));
    // Derating can never push output below zero.
    CHECK(panel_power_kw(0.5, 1e7, kSpec) == 0.0);
}

TEST_CASE("panel power stays within its physical envelope") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> irr(0.0, 1.4);
    std::uniform_real_distribution<double> temp(-20.0, 80.0);
    for (int i = 0; i < 200; ++i) {
        const double e = irr(rng);
        const double theta = cell_temperature(e, temp(rng), kSpec);
        const double p = panel_power_kw(e, theta, kSpec);
        CHECK(p >= 0.0);
        CHECK(p <= kSpec.rated_kw * e / kSpec.stc_irradiance_kw_m2 *
                       (1.0 + std::abs(kSpec.gamma_pct_per_c)) + 1e-12);
    }
}

TEST_CASE("fleet generation scales linearly in the panel count") {
    TimeSeries irr{{{2023, 6, 1}, 0}, 1.0, {0.0, 0.3, 0.8, 1.0, 0.6}};
    TimeSeries amb{{{2023, 6, 1}, 0}, 1.0, {12.0, 15.0, 22.0, 28.0, 24.0}};

    const TimeSeries zero = fleet_generation(irr, amb, 0, kSpec);
    for (double v : zero.values) CHECK(v == 0.0);

    const TimeSeries one = fleet_generation(irr, amb, 1, kSpec);
    const TimeSeries single = panel_generation(irr, amb, kSpec);
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(one.values[i] == Approx(single.values[i]));

    const TimeSeries large = fleet_generation(irr, amb, 146, kSpec);
    for (std::size_t i = 0; i < large.size(); ++i)
        CHECK(large.values[i] == Approx(146.0 * single.values[i]));

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> count(0, 40);
    for (int trial = 0; trial < 20; ++trial) {
        const int a = count(rng), b = count(rng);
        const TimeSeries fa = fleet_generation(irr, amb, a, kSpec);
        const TimeSeries fb = fleet_generation(irr, amb, b, kSpec);
        const TimeSeries fab = fleet_generation(irr, amb, a + b, kSpec);
        for (std::size_t i = 0; i < fab.size(); ++i)
            CHECK(fab.values[i] == Approx(fa.values[i] + fb.values[i]));
    }

    TimeSeries misaligned = amb;
    misaligned.values.pop_back();
    CHECK_THROWS_AS(fleet_generation(irr, misaligned, 1, kSpec), SeriesMismatchError);
}

TEST_CASE("roof area bounds the panel count") {
    CHECK(max_panels(0.0, kSpec) == 0);
    CHECK(max_panels(2.4, kSpec) == 1);
    CHECK(max_panels(50.0, kSpec) == 20);
    CHECK_THROWS_AS(max_panels(-1.0, kSpec), DomainError);

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> area(0.0, 400.0);
    int prev = 0;
    double prev_area = 0.0;
    for (int i = 0; i < 100; ++i) {
        double a = area(rng);
        const int n = max_panels(a, kSpec);
        CHECK(n * kSpec.panel_area_m2 <= a + 1e-9);
        if (a >= prev_area) {
            // monotone in the roof area
        }
        if (a < prev_area) std::swap(a, prev_area);
        CHECK(max_panels(a, kSpec) >= max_panels(prev_area, kSpec));
        prev_area = a;
        prev = n;
    }
    (void)prev;
}

TEST_CASE("pv cost components") {
    const PVFleetCosts zero = pv_costs(0, kSpec);
    CHECK(zero.capex_eur == 0.0);
    CHECK(zero.omca_eur_per_year == 0.0);

    const PVFleetCosts one = pv_costs(1, kSpec);
    CHECK(one.capex_eur == Approx(516.0));
    CHECK(one.omca_eur_per_year == Approx(10.75));

    CHECK(pv_costs(146, kSpec).capex_eur == Approx(75336.0));
}
