#include <doctest.h>

#include <cmath>

#include "salpeter/delta_check.hpp"

using namespace salpeter;

namespace {
const Units kNatural{};
}

TEST_CASE("narrow delta basis matches the analytic shape to machine precision") {
    // The constant kernel is a rank-one perturbation, for which
    // phi_i = const/(eps - E(p_i)) holds exactly at the discrete level.
    const Grid g = make_grid(-20.0, 20.0, 256);
    const EigenBasis basis =
        diagonalize(build_hamiltonian(g, Potential::narrow_delta(1.0), kNatural));
    int n = 0;
    (basis.eps.array() - 1.02).abs().minCoeff(&n);
    const DeltaComparison cmp = compare_to_delta_limit(basis, n, g, kNatural);
    CHECK(cmp.rel_l2_error < 1e-10);
    CHECK(std::abs(cmp.scale) > 0.0);
}

TEST_CASE("thin rectangular barrier stays close to the analytic shape") {
    const Grid g = make_grid(-20.0, 20.0, 512);
    const double coupling = 1.0;  // V0 * L
    const EigenBasis basis = diagonalize(
        build_hamiltonian(g, Potential::rectangular(coupling / g.dx, g.dx), kNatural));
    int n = 0;
    (basis.eps.array() - 1.02).abs().minCoeff(&n);
    CHECK(std::abs(basis.eps(n) - 1.02) < 0.05);
    const DeltaComparison cmp = compare_to_delta_limit(basis, n, g, kNatural);
    CHECK(cmp.rel_l2_error < 0.05);
}

TEST_CASE("residual shrinks as the barrier narrows toward dx") {
    const Grid g = make_grid(-20.0, 20.0, 512);
    const double coupling = 1.0;
    std::vector<double> residuals;
    for (double k : {4.0, 2.0, 1.0}) {
        const double length = k * g.dx;
        const EigenBasis basis = diagonalize(
            build_hamiltonian(g, Potential::rectangular(coupling / length, length), kNatural));
        int n = 0;
        (basis.eps.array() - 1.02).abs().minCoeff(&n);
        residuals.push_back(compare_to_delta_limit(basis, n, g, kNatural).rel_l2_error);
    }
    // monotone trend, allowing 10% noise
    CHECK(residuals[1] < residuals[0] * 1.1);
    CHECK(residuals[2] < residuals[1] * 1.1);
}

TEST_CASE("self-fit of the analytic shape has zero residual") {
    const Grid g = make_grid(-10.0, 10.0, 64);
    const double eps_n = 1.7;
    EigenBasis synthetic;
    synthetic.grid = g;
    synthetic.units = kNatural;
    synthetic.eps = Eigen::VectorXd::Constant(1, eps_n);
    synthetic.vecs = delta_limit_eigenfunction(eps_n, g, kNatural) * 3.7;
    const DeltaComparison cmp = compare_to_delta_limit(synthetic, 0, g, kNatural);
    CHECK(cmp.rel_l2_error < 1e-12);
    CHECK(std::abs(cmp.scale - std::complex<double>(3.7)) < 1e-12);
}

TEST_CASE("vanishing coupling degenerates gracefully") {
    // Free eigenvalues coincide with grid dispersion values, so the analytic
    // shape has a pole: flagged as a singularity, not a crash.
    const Grid g = make_grid(-20.0, 20.0, 128);
    const EigenBasis free_basis =
        diagonalize(build_hamiltonian(g, Potential::rectangular(0.0, 1.0), kNatural));
    CHECK_THROWS_AS(compare_to_delta_limit(free_basis, 3, g, kNatural), SingularityError);

    // tiny but nonzero coupling: no pole, large residual is fine, no crash
    const EigenBasis weak = diagonalize(
        build_hamiltonian(g, Potential::rectangular(1e-9 / g.dx, g.dx), kNatural));
    int n = 0;
    (weak.eps.array() - 1.2).abs().minCoeff(&n);
    const DeltaComparison cmp = compare_to_delta_limit(weak, n, g, kNatural);
    CHECK(std::isfinite(cmp.rel_l2_error));
}

TEST_CASE("index range is validated") {
    const Grid g = make_grid(-10.0, 10.0, 64);
    const EigenBasis basis =
        diagonalize(build_hamiltonian(g, Potential::narrow_delta(1.0), kNatural));
    CHECK_THROWS_AS(compare_to_delta_limit(basis, -1, g, kNatural), ArgumentError);
    CHECK_THROWS_AS(compare_to_delta_limit(basis, g.n, g, kNatural), ArgumentError);
}
