#include "salpeter/kernel.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>

namespace salpeter {

double dispersion(double p, const Units& u) {
    return std::hypot(p * u.c, u.mass * u.c * u.c);
}

HamiltonianMatrix build_hamiltonian(const Grid& g, const Potential& v, const Units& u) {
    validate_units(u);
    const int n = g.n;
    const double coupling = g.dp / std::sqrt(2.0 * M_PI * u.hbar);

    HamiltonianMatrix h{Eigen::MatrixXcd(n, n), g, u};
    // Fill the upper triangle and mirror-conjugate: Hermitian by construction.
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const std::complex<double> vij = coupling * momentum_element(v, g.p_nodes(i) - g.p_nodes(j));
            h.m(i, j) = vij;
            if (j != i) h.m(j, i) = std::conj(vij);
        }
        h.m(i, i) += dispersion(g.p_nodes(i), u);
    }
    return h;
}

EigenBasis diagonalize(const HamiltonianMatrix& h) {
    const int n = static_cast<int>(h.m.rows());
    if (n == 0 || h.m.cols() != n) throw ShapeError("diagonalize: matrix must be square and non-empty");

    const double scale = h.m.cwiseAbs().maxCoeff();
    const double herm_residual = (h.m - h.m.adjoint()).cwiseAbs().maxCoeff();
    if (herm_residual > 1e-10 * std::max(1.0, scale))
        throw NumericalError("diagonalize: matrix is not Hermitian, max |M - M^H| = " +
                             std::to_string(herm_residual));

    EigenBasis basis;
    basis.grid = h.grid;
    basis.units = h.units;

    // Every supported barrier is real and even, so the kernel is real
    // symmetric; use the much faster real solver when that holds.
    const double max_imag = h.m.imag().cwiseAbs().maxCoeff();
    if (max_imag <= 1e-14 * std::max(1.0, scale)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.m.real());
        if (es.info() != Eigen::Success)
            throw NumericalError("diagonalize: real symmetric eigensolver failed to converge (n=" +
                                 std::to_string(n) + ", max |M_ij| = " + std::to_string(scale) + ")");
        basis.eps = es.eigenvalues();
        basis.vecs = es.eigenvectors().cast<std::complex<double>>();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.m);
        if (es.info() != Eigen::Success)
            throw NumericalError("diagonalize: Hermitian eigensolver failed to converge (n=" +
                                 std::to_string(n) + ", max |M_ij| = " + std::to_string(scale) + ")");
        basis.eps = es.eigenvalues();
        basis.vecs = es.eigenvectors();
    }

    // Normalize to sum_i |phi|^2 dp = 1 and fix the global phase of each
    // column so outputs are reproducible and diffable.
    basis.vecs /= std::sqrt(h.grid.dp);
    for (int c = 0; c < n; ++c) {
        int imax = 0;
        basis.vecs.col(c).cwiseAbs().maxCoeff(&imax);
        const std::complex<double> top = basis.vecs(imax, c);
        const double mag = std::abs(top);
        if (mag > 0.0) basis.vecs.col(c) *= std::conj(top) / mag;
    }
    return basis;
}

Eigen::VectorXcd delta_limit_eigenfunction(double eps_n, const Grid& g, const Units& u) {
    Eigen::VectorXcd phi(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double denom = eps_n - dispersion(g.p_nodes(i), u);
        if (std::abs(denom) < 1e-12)
            throw SingularityError("delta_limit_eigenfunction: eps_n = " + std::to_string(eps_n) +
                                   " collides with E(p) at node " + std::to_string(i) +
                                   " (p = " + std::to_string(g.p_nodes(i)) + ")");
        phi(i) = 1.0 / denom;
    }
    return phi;
}

} // namespace salpeter
