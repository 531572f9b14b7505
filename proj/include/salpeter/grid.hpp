#pragma once

#include <Eigen/Core>

#include "salpeter/errors.hpp"

namespace salpeter {

/// Conjugate position/momentum lattices bound by the DFT convention.
///
/// Positions:  x_j = x_min + j*dx, j = 0..N-1, dx = (x_max - x_min)/N
///             (periodic box, x_max itself is not a node).
/// Momenta:    p_k = (k - N/2)*dp, dp = 2*pi/(x_max - x_min),
///             centered on 0 and covering [-pi/dx, pi/dx).
/// The identity dx*dp*N = 2*pi makes the transforms in fourier.hpp unitary
/// in the weighted discrete norms sum |psi|^2 dx and sum |psi|^2 dp.
struct Grid {
    double x_min = 0.0;
    double x_max = 0.0;
    int n = 0;
    double dx = 0.0;
    double dp = 0.0;
    Eigen::VectorXd x_nodes;
    Eigen::VectorXd p_nodes;

    bool operator==(const Grid& o) const {
        return x_min == o.x_min && x_max == o.x_max && n == o.n;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

/// n_points must be even and at least 8.
Grid make_grid(double x_min, double x_max, int n_points);

} // namespace salpeter
