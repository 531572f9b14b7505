// Integration checks anchored to the published figure parameters.
#include <doctest.h>

#include <cmath>

#include "salpeter/delta_check.hpp"
#include "salpeter/observables.hpp"
#include "salpeter/propagate.hpp"

using namespace salpeter;

namespace {
const Units kNatural{};
}

TEST_CASE("wide barrier spectrum holds a state near eps = 1.02 with an x-space plateau") {
    const Grid g = make_grid(-20.0, 20.0, 512);
    const EigenBasis basis =
        diagonalize(build_hamiltonian(g, Potential::rectangular(20.0, 5.0), kNatural));

    int n = 0;
    const double gap = (basis.eps.array() - 1.02).abs().minCoeff(&n);
    CHECK(gap <= 0.02);

    // |FT(phi_n)| should be roughly flat where the barrier sits (|x| < 2.5).
    Wavepacket phi;
    phi.rep = Rep::Momentum;
    phi.grid = g;
    phi.amps = basis.vecs.col(n);
    const Eigen::VectorXd rho = to_position(phi, g).density();

    double mean = 0.0, count = 0.0;
    for (int j = 0; j < g.n; ++j)
        if (std::abs(g.x_nodes(j)) < 2.0) {
            mean += std::sqrt(rho(j));
            count += 1.0;
        }
    mean /= count;
    double var = 0.0;
    for (int j = 0; j < g.n; ++j)
        if (std::abs(g.x_nodes(j)) < 2.0) var += std::pow(std::sqrt(rho(j)) - mean, 2);
    const double cv = std::sqrt(var / count) / mean;
    CHECK(cv < 0.3);  // plateau: low relative variation across the barrier
}

TEST_CASE("tunneling snapshots: small transmitted lobe, dominant reflection") {
    const Grid g = make_grid(-40.0, 40.0, 512);
    const Potential barrier = Potential::smooth_tanh(20.0, 1.0, 20.0);
    const PacketSpec spec{-3.5, 1.0, 2.0};
    const Wavepacket psi0_p = to_momentum(cos8_packet(spec, g), g);
    const Evolution ev(diagonalize(build_hamiltonian(g, barrier, kNatural)), psi0_p);
    const double cut = transmitted_cut(barrier);

    const Wavepacket at5 = ev.at_position(5.0);
    const double trans5 = region_mass(at5, cut, g.x_max).mass;
    const double refl5 = region_mass(at5, g.x_min, -cut).mass;
    CHECK(trans5 > 0.0);
    CHECK(refl5 > 10.0 * trans5);

    // norm is conserved through the whole pipeline
    CHECK(std::abs(at5.norm() - 1.0) < 1e-10);

    // Hegerfeldt-type leakage: the free packet's OLC fraction is strictly
    // positive over the transient window.
    const Evolution free_ev(g, kNatural, psi0_p);
    const double right = support_edges(spec).second;
    for (double t : {0.1, 0.5, 1.0, 2.5, 5.0}) {
        const OlcRecord rec = olc_fraction(free_ev.at_position(t), right, t, kNatural);
        CHECK(rec.fraction > 0.0);
    }
}

TEST_CASE("transmitted peaks at t = 100 are distinct and ordered in V0") {
    const Grid g = make_grid(-144.0, 144.0, 1024);
    const PacketSpec spec{-22.25, 1.0, 20.0};
    const Wavepacket psi0_p = to_momentum(cos8_packet(spec, g), g);
    const double cut = transmitted_cut(Potential::smooth_tanh(2.0, 1.0, 20.0));

    const auto peak_for = [&](double v0) {
        if (v0 == 0.0) {
            const Evolution free_ev(g, kNatural, psi0_p);
            return peak_position(free_ev.at_position(100.0), cut);
        }
        const Potential pot = Potential::smooth_tanh(v0, 1.0, 20.0);
        const Evolution ev(diagonalize(build_hamiltonian(g, pot, kNatural)), psi0_p);
        return peak_position(ev.at_position(100.0), cut);
    };

    const double peak_free = peak_for(0.0);
    const double peak_v2 = peak_for(2.0);
    const double peak_v3 = peak_for(3.0);
    CAPTURE(peak_free);
    CAPTURE(peak_v2);
    CAPTURE(peak_v3);

    CHECK(peak_free != peak_v2);
    CHECK(peak_v2 != peak_v3);
    CHECK(peak_free != peak_v3);
    const bool increasing = peak_free < peak_v2 && peak_v2 < peak_v3;
    const bool decreasing = peak_free > peak_v2 && peak_v2 > peak_v3;
    CHECK((increasing || decreasing));
}
