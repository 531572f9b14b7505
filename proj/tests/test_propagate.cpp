#include <doctest.h>

#include <cmath>

#include "salpeter/observables.hpp"
#include "salpeter/propagate.hpp"

using namespace salpeter;

namespace {

const Units kNatural{};

struct SmallScene {
    Grid g = make_grid(-20.0, 20.0, 128);
    PacketSpec spec{-3.0, 1.0, 2.0};
    Wavepacket psi0_p;
    EigenBasis basis;

    explicit SmallScene(const Potential& pot) {
        psi0_p = to_momentum(cos8_packet(spec, g), g);
        basis = diagonalize(build_hamiltonian(g, pot, kNatural));
    }
};

} // namespace

TEST_CASE("t = 0 is the identity within the completeness error") {
    SmallScene s(Potential::smooth_tanh(20.0, 1.0, 20.0));
    const Wavepacket back = spectral_propagate(s.basis, s.psi0_p, 0.0);
    CHECK((back.amps - s.psi0_p.amps).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("free basis reproduces the free propagator") {
    SmallScene s(Potential::rectangular(0.0, 1.0));
    for (double t : {0.5, 3.0, 10.0}) {
        const Wavepacket spectral = spectral_propagate(s.basis, s.psi0_p, t);
        const Wavepacket direct = free_propagate(s.g, s.psi0_p, t, kNatural);
        CHECK((spectral.amps - direct.amps).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("free propagation is a pure phase") {
    SmallScene s(Potential::rectangular(0.0, 1.0));
    const Wavepacket evolved = free_propagate(s.g, s.psi0_p, 7.3, kNatural);
    CHECK((evolved.amps.cwiseAbs() - s.psi0_p.amps.cwiseAbs()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(evolved.norm() - 1.0) < 1e-13);
}

TEST_CASE("unitarity, group law and reversibility") {
    SmallScene s(Potential::smooth_tanh(20.0, 1.0, 20.0));
    for (double t : {0.1, 1.0, 5.0, 25.0})
        CHECK(std::abs(spectral_propagate(s.basis, s.psi0_p, t).norm() - 1.0) < 1e-10);

    const Wavepacket two_step =
        spectral_propagate(s.basis, spectral_propagate(s.basis, s.psi0_p, 1.5), 2.5);
    const Wavepacket one_step = spectral_propagate(s.basis, s.psi0_p, 4.0);
    CHECK((two_step.amps - one_step.amps).cwiseAbs().maxCoeff() < 1e-9);

    const Wavepacket there_and_back =
        spectral_propagate(s.basis, spectral_propagate(s.basis, s.psi0_p, 6.0), -6.0);
    CHECK((there_and_back.amps - s.psi0_p.amps).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("evolve_series is stateless and validates its times") {
    SmallScene s(Potential::smooth_tanh(20.0, 1.0, 20.0));
    const Evolution ev(s.basis, s.psi0_p);

    const auto series = evolve_series(ev, {0.0, 2.0, 5.0});
    CHECK(series.size() == 3);
    CHECK(series[0].rep == Rep::Position);
    for (size_t i = 0; i < series.size(); ++i) CHECK(series[i].time == std::vector<double>{0.0, 2.0, 5.0}[i]);

    for (size_t i = 0; i < series.size(); ++i) {
        const Wavepacket single = ev.at_position(series[i].time);
        CHECK((series[i].amps - single.amps).cwiseAbs().maxCoeff() == 0.0);
    }

    CHECK_THROWS_AS(evolve_series(ev, {2.0, 1.0}), ConfigError);
}

TEST_CASE("evolution caches coefficients consistently with spectral_propagate") {
    SmallScene s(Potential::smooth_tanh(20.0, 1.0, 20.0));
    const Evolution ev(s.basis, s.psi0_p);
    for (double t : {0.0, 1.2, 9.7}) {
        const Wavepacket a = ev.at(t);
        const Wavepacket b = spectral_propagate(s.basis, s.psi0_p, t);
        CHECK((a.amps - b.amps).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("free packet leaks outside the light cone") {
    const Grid g = make_grid(-40.0, 40.0, 512);
    const PacketSpec spec{-3.5, 1.0, 2.0};
    const Wavepacket psi0_p = to_momentum(cos8_packet(spec, g), g);
    const double right = support_edges(spec).second;

    const Evolution free_ev(g, kNatural, psi0_p);
    for (double t : {0.5, 2.0, 5.0}) {
        const Wavepacket snap = free_ev.at_position(t);
        const double beyond = region_mass(snap, right + t, g.x_max).mass;
        CHECK(beyond > 0.0);
    }
}

TEST_CASE("grid mismatch raises a shape error") {
    SmallScene s(Potential::rectangular(0.0, 1.0));
    const Grid other = make_grid(-20.0, 20.0, 64);
    const Wavepacket psi_other = to_momentum(cos8_packet(s.spec, other), other);
    CHECK_THROWS_AS(spectral_propagate(s.basis, psi_other, 1.0), ShapeError);
    CHECK_THROWS_AS(free_propagate(s.g, psi_other, 1.0, kNatural), ShapeError);
}
