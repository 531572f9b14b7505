#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "salpeter/fourier.hpp"
#include "salpeter/wavepacket.hpp"

using namespace salpeter;

TEST_CASE("support edges") {
    auto [l1, r1] = support_edges(PacketSpec{-3.5, 1.0, 2.0});
    CHECK(l1 == -4.5);
    CHECK(r1 == -2.5);
    auto [l2, r2] = support_edges(PacketSpec{0.0, 0.0, 2.0});
    CHECK(l2 == -1.0);
    CHECK(r2 == 1.0);
    auto [l3, r3] = support_edges(PacketSpec{-22.25, 1.0, 20.0});
    CHECK(l3 == -32.25);
    CHECK(r3 == -12.25);
}

TEST_CASE("cos8 packet: compact support, normalization, mean position") {
    // Box chosen so the support edges +-1 land exactly on nodes.
    const Grid g = make_grid(-8.0, 8.0, 4096);
    const PacketSpec spec{0.0, 1.0, 2.0};
    const Wavepacket psi = cos8_packet(spec, g);

    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
    for (int j = 0; j < g.n; ++j)
        if (std::abs(g.x_nodes(j)) >= 1.0) CHECK(std::abs(psi.amps(j)) == 0.0);
    CHECK(std::abs(mean_position(psi) - spec.x0) < g.dx);

    // Pre-normalization norm^2 equals delta_x * binom(16,8) / 2^16; the
    // quadrature oracle reproduces the same constant.
    const double frozen = 12870.0 / 65536.0;
    const auto quad = oracles::simpson(
        [&spec](double x) {
            return std::complex<double>(std::pow(std::cos(M_PI * (x - spec.x0) / spec.delta_x), 16));
        },
        -1.0, 1.0, 4000);
    CHECK(quad.real() == doctest::Approx(spec.delta_x * frozen).epsilon(1e-12));

    double riemann = 0.0;
    for (int j = 0; j < g.n; ++j) {
        const double u = g.x_nodes(j);
        if (std::abs(u) < 1.0) riemann += std::pow(std::cos(M_PI * u / spec.delta_x), 16) * g.dx;
    }
    CHECK(riemann == doctest::Approx(spec.delta_x * frozen).epsilon(1e-12));
}

TEST_CASE("cos8 packet configuration errors") {
    const Grid g = make_grid(-10.0, 10.0, 256);
    CHECK_THROWS_AS(cos8_packet(PacketSpec{-10.0, 0.0, 2.0}, g), ConfigError);  // clipped
    CHECK_THROWS_AS(cos8_packet(PacketSpec{9.5, 0.0, 2.0}, g), ConfigError);    // clipped
    CHECK_THROWS_AS(cos8_packet(PacketSpec{0.0, 0.0, 0.3}, g), ConfigError);    // under-resolved
    CHECK_THROWS_AS(cos8_packet(PacketSpec{0.0, 0.0, -1.0}, g), ConfigError);
}

TEST_CASE("momentum centering of the cos8 packet") {
    const Grid g = make_grid(-40.0, 40.0, 512);
    const PacketSpec spec{-3.5, 1.0, 2.0};
    const Wavepacket tilde = to_momentum(cos8_packet(spec, g), g);
    CHECK(std::abs(mean_momentum(tilde) - spec.p0) <= g.dp);
}

TEST_CASE("phase-shift duality: p0 -> p0 + dp shifts the momentum profile") {
    const Grid g = make_grid(-40.0, 40.0, 512);
    const PacketSpec spec{-3.5, 1.0, 2.0};
    const PacketSpec shifted{-3.5, 1.0 + g.dp, 2.0};

    // Parabolic interpolation of the density peak.
    const auto peak_location = [&g](const Wavepacket& tilde) {
        const Eigen::VectorXd rho = tilde.density();
        int k = 0;
        rho.maxCoeff(&k);
        const double a = rho(k - 1), b = rho(k), c = rho(k + 1);
        return g.p_nodes(k) + 0.5 * g.dp * (a - c) / (a - 2.0 * b + c);
    };
    const double p1 = peak_location(to_momentum(cos8_packet(spec, g), g));
    const double p2 = peak_location(to_momentum(cos8_packet(shifted, g), g));
    CHECK(std::abs(p2 - p1 - g.dp) < 1e-3);
}

TEST_CASE("normalize rejects an empty packet") {
    const Grid g = make_grid(-1.0, 1.0, 16);
    Wavepacket psi;
    psi.grid = g;
    psi.amps = Eigen::VectorXcd::Zero(g.n);
    CHECK_THROWS_AS(normalized(std::move(psi)), NumericalError);
}
