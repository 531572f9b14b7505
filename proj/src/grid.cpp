#include "salpeter/grid.hpp"

#include <cmath>
#include <string>

namespace salpeter {

Grid make_grid(double x_min, double x_max, int n_points) {
    if (!(x_max > x_min))
        throw ConfigError("grid: x_max must be greater than x_min");
    if (n_points < 8 || n_points % 2 != 0)
        throw ConfigError("grid: n_points must be even and >= 8, got " +
                          std::to_string(n_points));

    Grid g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.n = n_points;
    g.dx = (x_max - x_min) / n_points;
    g.dp = 2.0 * M_PI / (x_max - x_min);
    g.x_nodes.resize(n_points);
    g.p_nodes.resize(n_points);
    for (int j = 0; j < n_points; ++j) {
        g.x_nodes(j) = x_min + j * g.dx;
        g.p_nodes(j) = (j - n_points / 2) * g.dp;
    }
    return g;
}

} // namespace salpeter
