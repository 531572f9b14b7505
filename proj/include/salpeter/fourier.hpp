#pragma once

#include "salpeter/grid.hpp"
#include "salpeter/wavepacket.hpp"

namespace salpeter {

/// Unitary discrete transforms matching the continuum convention
///   psi(p) = (2 pi)^(-1/2) \int dx e^{-i p x} psi(x)
/// on the lattice (hbar = 1), including the x_min offset and the centered
/// momentum grid, so a smooth packet's discrete transform agrees with its
/// analytic Fourier transform up to the Riemann-sum error.
Wavepacket to_momentum(const Wavepacket& psi, const Grid& g);
Wavepacket to_position(const Wavepacket& psi, const Grid& g);

} // namespace salpeter
