#pragma once

#include <complex>

#include "salpeter/kernel.hpp"

namespace salpeter {

/// Result of fitting the analytic narrow-barrier shape 1/(eps_n - E(p))
/// to a numerical eigenvector. scale absorbs the unknown global factor
/// V0 L I_n / (2 pi) that the narrow-barrier limit leaves undetermined.
struct DeltaComparison {
    double eps_n = 0.0;
    double rel_l2_error = 0.0;
    std::complex<double> scale{0.0, 0.0};
};

/// Least-squares complex scalar fit of the analytic shape to eigenvector n:
/// scale = <analytic, numeric> / <analytic, analytic>, residual relative to
/// the numeric vector's norm. Meaningful for bases built from NarrowDelta
/// or thin rectangular barriers (L of the order of dx).
DeltaComparison compare_to_delta_limit(const EigenBasis& basis, int n, const Grid& g,
                                       const Units& u);

} // namespace salpeter
