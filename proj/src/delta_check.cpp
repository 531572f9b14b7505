#include "salpeter/delta_check.hpp"

#include <string>

namespace salpeter {

DeltaComparison compare_to_delta_limit(const EigenBasis& basis, int n, const Grid& g,
                                       const Units& u) {
    if (n < 0 || n >= basis.eps.size())
        throw ArgumentError("compare_to_delta_limit: eigenvector index " + std::to_string(n) +
                            " out of range");
    if (basis.grid != g)
        throw ShapeError("compare_to_delta_limit: basis grid does not match the given grid");

    const double eps_n = basis.eps(n);
    const Eigen::VectorXcd analytic = delta_limit_eigenfunction(eps_n, g, u);
    const Eigen::VectorXcd numeric = basis.vecs.col(n);

    DeltaComparison cmp;
    cmp.eps_n = eps_n;
    // Least-squares global factor: scale = <analytic, numeric>/<analytic, analytic>.
    cmp.scale = analytic.dot(numeric) / analytic.squaredNorm();
    cmp.rel_l2_error = (numeric - cmp.scale * analytic).norm() / numeric.norm();
    return cmp;
}

} // namespace salpeter
