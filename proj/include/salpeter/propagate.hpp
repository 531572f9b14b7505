#pragma once

#include <vector>

#include "salpeter/fourier.hpp"
#include "salpeter/kernel.hpp"
#include "salpeter/wavepacket.hpp"

namespace salpeter {

/// Spectral evolution: expand psi0 over the barrier eigenbasis and apply
/// the phases exp(-i eps_n t). psi0 must be in momentum representation on
/// the basis grid. Negative t is allowed (the evolution is reversible).
Wavepacket spectral_propagate(const EigenBasis& basis, const Wavepacket& psi0, double t);

/// Free evolution psi(t, p) = exp(-i E(p) t) psi0(p); exactly norm-preserving.
Wavepacket free_propagate(const Grid& g, const Wavepacket& psi0, double t, const Units& u);

/// Reusable propagator for one initial state. Expansion coefficients
/// c_n = sum_j phi_n*(p_j) psi0(p_j) dp are computed once and reused for
/// every requested time.
class Evolution {
  public:
    /// Spectral propagator over a barrier eigenbasis.
    Evolution(EigenBasis basis, const Wavepacket& psi0_momentum);
    /// Free propagator.
    Evolution(const Grid& g, const Units& u, const Wavepacket& psi0_momentum);

    /// State at time t in momentum representation.
    Wavepacket at(double t) const;
    /// State at time t in position representation.
    Wavepacket at_position(double t) const;

    const Grid& grid() const { return grid_; }
    const Units& units() const { return units_; }
    bool is_free() const { return free_; }

  private:
    bool free_ = false;
    Grid grid_;
    Units units_;
    Eigen::VectorXd eps_;      // eigenvalues, or E(p_k) in the free case
    Eigen::MatrixXcd vecs_;    // empty in the free case
    Eigen::VectorXcd coeffs_;  // c_n, or psi0(p_k) in the free case
    double t0_ = 0.0;
};

/// Per-time propagation + transform to position representation.
/// times must be sorted ascending.
std::vector<Wavepacket> evolve_series(const Evolution& ev, const std::vector<double>& times);

} // namespace salpeter
