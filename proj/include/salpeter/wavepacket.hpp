#pragma once

#include <Eigen/Core>
#include <complex>
#include <utility>

#include "salpeter/grid.hpp"

namespace salpeter {

enum class Rep { Position, Momentum };

/// Complex amplitude array tagged with its representation and time stamp.
struct Wavepacket {
    Eigen::VectorXcd amps;
    Rep rep = Rep::Position;
    double time = 0.0;
    Grid grid;

    /// Weighted discrete L2 norm: sqrt(sum |amps|^2 * dx) in position
    /// representation, sqrt(sum |amps|^2 * dp) in momentum representation.
    double norm() const;
    double weight() const { return rep == Rep::Position ? grid.dx : grid.dp; }
    Eigen::VectorXd density() const { return amps.cwiseAbs2(); }
};

/// Compact-support packet parameters: mean position, mean momentum and
/// full support width.
struct PacketSpec {
    double x0 = 0.0;
    double p0 = 0.0;
    double delta_x = 1.0;
};

/// (x0 - delta_x/2, x0 + delta_x/2)
std::pair<double, double> support_edges(const PacketSpec& spec);

/// cos^8[pi (x - x0)/delta_x] * exp(i p0 x) on the support, exactly zero
/// at and outside the support edges, normalized to unit norm.
Wavepacket cos8_packet(const PacketSpec& spec, const Grid& g);

/// Rescales to unit norm in the representation-appropriate weighted norm.
Wavepacket normalized(Wavepacket psi);

/// Discrete Riemann-sum means; robust to non-unit norm.
double mean_position(const Wavepacket& psi);
double mean_momentum(const Wavepacket& psi);

} // namespace salpeter
