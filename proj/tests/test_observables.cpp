#include <doctest.h>

#include <cmath>

#include "salpeter/observables.hpp"

using namespace salpeter;

namespace {

const Units kNatural{};

Wavepacket lobe(const Grid& g, double center, double width) {
    Wavepacket psi;
    psi.rep = Rep::Position;
    psi.grid = g;
    psi.amps.setZero(g.n);
    for (int j = 0; j < g.n; ++j) {
        const double u = g.x_nodes(j) - center;
        if (std::abs(u) < width / 2.0)
            psi.amps(j) = std::cos(M_PI * u / width) * std::cos(M_PI * u / width);
    }
    return normalized(std::move(psi));
}

} // namespace

TEST_CASE("region_mass: normalization, compact support, additivity, clipping") {
    const Grid g = make_grid(-10.0, 10.0, 256);
    const Wavepacket psi = lobe(g, -2.0, 3.0);

    CHECK(std::abs(region_mass(psi, g.x_min, g.x_max).mass - 1.0) < 1e-10);
    CHECK(region_mass(psi, 2.0, 9.0).mass == 0.0);

    const double ab = region_mass(psi, -6.0, -2.5).mass;
    const double bc = region_mass(psi, -2.5, 1.0).mass;
    const double ac = region_mass(psi, -6.0, 1.0).mass;
    CHECK(ab + bc == ac);  // lattice sums partition exactly

    const RegionProbability clipped = region_mass(psi, -50.0, 50.0);
    CHECK(clipped.clipped);
    CHECK(clipped.lower == g.x_min);
    CHECK(clipped.upper == g.x_max);
    CHECK(std::abs(clipped.mass - 1.0) < 1e-10);

    CHECK_THROWS_AS(region_mass(psi, 1.0, 1.0), ArgumentError);
}

TEST_CASE("olc_fraction at t = 0 is exactly zero and flags out-of-window cones") {
    const Grid g = make_grid(-10.0, 10.0, 256);
    const PacketSpec spec{-2.0, 0.5, 3.0};
    const Wavepacket psi = cos8_packet(spec, g);
    const double right = support_edges(spec).second;

    const OlcRecord at0 = olc_fraction(psi, right, 0.0, kNatural);
    CHECK(at0.fraction == 0.0);
    CHECK(at0.light_cone_pos == right);
    CHECK_FALSE(at0.out_of_window);

    const OlcRecord far = olc_fraction(psi, right, 100.0, kNatural);
    CHECK(far.out_of_window);
    CHECK(far.fraction == 0.0);
}

TEST_CASE("olc series fractions stay in [0, 1] and the global max tie-breaks first") {
    const Grid g = make_grid(-20.0, 20.0, 256);
    const PacketSpec spec{-3.0, 1.0, 2.0};
    const Wavepacket psi0_p = to_momentum(cos8_packet(spec, g), g);
    const Evolution free_ev(g, kNatural, psi0_p);

    std::vector<double> times;
    for (double t = 0.0; t <= 6.0; t += 0.5) times.push_back(t);
    const auto series = olc_series(free_ev, support_edges(spec).second, times);
    REQUIRE(series.size() == times.size());
    for (size_t i = 0; i < series.size(); ++i) {
        CHECK(series[i].t == times[i]);
        CHECK(series[i].fraction >= 0.0);
        CHECK(series[i].fraction <= 1.0);
        CHECK(series[i].light_cone_pos == support_edges(spec).second + times[i]);
    }

    std::vector<OlcRecord> constant(4);
    for (int i = 0; i < 4; ++i) constant[i] = OlcRecord{double(i), 0.0, 0.25, false};
    const auto [t_star, f_star] = olc_global_max(constant);
    CHECK(t_star == 0.0);
    CHECK(f_star == 0.25);

    CHECK_THROWS_AS(olc_global_max({}), ArgumentError);
}

TEST_CASE("transmitted-denominator variant") {
    const Grid g = make_grid(-10.0, 10.0, 256);
    const Wavepacket psi = lobe(g, 3.0, 2.0);  // everything beyond x_cut = 0
    const OlcRecord total = olc_fraction(psi, -9.0, 10.0, kNatural, OlcDenominator::Total);
    const OlcRecord trans =
        olc_fraction(psi, -9.0, 10.0, kNatural, OlcDenominator::Transmitted, 0.0);
    CHECK(total.fraction == doctest::Approx(trans.fraction).epsilon(1e-12));

    // no transmitted mass -> fraction pinned to zero rather than 0/0
    const Wavepacket left_only = lobe(g, -5.0, 2.0);
    const OlcRecord empty =
        olc_fraction(left_only, -9.5, 0.1, kNatural, OlcDenominator::Transmitted, 0.0);
    CHECK(empty.fraction == 0.0);
}

TEST_CASE("conditional mean of fully transmitted and symmetric densities") {
    const Grid g = make_grid(-10.0, 10.0, 512);
    const Wavepacket psi = lobe(g, 4.0, 2.0);
    CHECK(std::abs(conditional_mean_position(psi, 0.0) - mean_position(psi)) < 1e-12);
    CHECK(std::abs(conditional_mean_position(psi, 0.0) - 4.0) < g.dx);

    const double mean = conditional_mean_position(psi, 3.9);
    CHECK(mean > 3.9);
    CHECK(mean < g.x_max);

    CHECK_THROWS_AS(conditional_mean_position(psi, 8.0), UndefinedObservableError);
}

TEST_CASE("peak position: lobe center, tie break, undefined case") {
    const Grid g = make_grid(-10.0, 10.0, 512);
    const Wavepacket psi = lobe(g, 4.0, 2.0);
    CHECK(std::abs(peak_position(psi, 0.0) - 4.0) <= g.dx / 2.0);

    // two exactly equal maxima -> smaller x wins
    Wavepacket twin;
    twin.rep = Rep::Position;
    twin.grid = g;
    twin.amps.setZero(g.n);
    twin.amps(300) = 1.0;
    twin.amps(400) = 1.0;
    twin = normalized(std::move(twin));
    CHECK(peak_position(twin, 0.0) == g.x_nodes(300));

    CHECK_THROWS_AS(peak_position(psi, 8.0), UndefinedObservableError);
}
