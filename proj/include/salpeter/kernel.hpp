#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>

#include "salpeter/grid.hpp"
#include "salpeter/potential.hpp"
#include "salpeter/units.hpp"

namespace salpeter {

/// Relativistic dispersion E(p) = sqrt(p^2 c^2 + m^2 c^4), always >= m c^2.
double dispersion(double p, const Units& u);

/// Discretized momentum-space Hamiltonian
///   M_ij = E(p_i) delta_ij + dp * V(p_i - p_j) / sqrt(2 pi hbar),
/// i.e. the Nystrom kernel scaled by dp so that the integral eigenvalue
/// equation becomes a standard Hermitian eigenproblem M phi = eps phi.
struct HamiltonianMatrix {
    Eigen::MatrixXcd m;
    Grid grid;
    Units units;
};

/// Full spectrum of a HamiltonianMatrix. Columns of vecs are phi_n(p_i),
/// normalized so sum_i |phi_n(p_i)|^2 dp = 1, with the largest-magnitude
/// component rotated to be real positive (deterministic phases).
struct EigenBasis {
    Eigen::VectorXd eps;
    Eigen::MatrixXcd vecs;
    Grid grid;
    Units units;
};

HamiltonianMatrix build_hamiltonian(const Grid& g, const Potential& v, const Units& u);

EigenBasis diagonalize(const HamiltonianMatrix& h);

/// Analytic narrow-barrier eigenfunction shape phi(p_i) = 1/(eps_n - E(p_i)),
/// valid up to a global factor. Throws SingularityError if eps_n collides
/// with a grid dispersion value.
Eigen::VectorXcd delta_limit_eigenfunction(double eps_n, const Grid& g, const Units& u);

/// Stable 64-bit key of (grid, potential, units) used for the eigenbasis
/// cache and the run manifests.
std::uint64_t physics_hash(const Grid& g, const Potential& v, const Units& u);

/// Binary dump/reload of a basis; returns false when the file is missing
/// or belongs to different physics.
void save_eigenbasis(const std::string& path, const EigenBasis& basis, std::uint64_t key);
bool load_eigenbasis(const std::string& path, std::uint64_t key, EigenBasis& out);

/// Cache-aware diagonalization. cache_dir may be empty (no caching);
/// cache_hit, when given, reports whether the basis came from disk.
EigenBasis load_or_diagonalize(const Grid& g, const Potential& v, const Units& u,
                               const std::string& cache_dir, bool* cache_hit = nullptr);

} // namespace salpeter
