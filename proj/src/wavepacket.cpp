#include "salpeter/wavepacket.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace salpeter {

double Wavepacket::norm() const { return std::sqrt(amps.squaredNorm() * weight()); }

std::pair<double, double> support_edges(const PacketSpec& spec) {
    return {spec.x0 - spec.delta_x / 2.0, spec.x0 + spec.delta_x / 2.0};
}

Wavepacket cos8_packet(const PacketSpec& spec, const Grid& g) {
    if (!(spec.delta_x > 0.0))
        throw ConfigError("packet: delta_x must be positive");
    const auto [left, right] = support_edges(spec);
    if (!(left > g.x_min && right < g.x_max))
        throw ConfigError("packet: support [" + std::to_string(left) + ", " +
                          std::to_string(right) + "] is clipped by the box [" +
                          std::to_string(g.x_min) + ", " + std::to_string(g.x_max) + "]");

    int nodes_in_support = 0;
    for (int j = 0; j < g.n; ++j)
        if (g.x_nodes(j) >= left && g.x_nodes(j) <= right) ++nodes_in_support;
    if (nodes_in_support < 8)
        throw ConfigError("packet: support under-resolved, only " +
                          std::to_string(nodes_in_support) +
                          " grid nodes across it (need >= 8)");

    Wavepacket psi;
    psi.rep = Rep::Position;
    psi.time = 0.0;
    psi.grid = g;
    psi.amps.setZero(g.n);
    const double half = spec.delta_x / 2.0;
    for (int j = 0; j < g.n; ++j) {
        const double u = g.x_nodes(j) - spec.x0;
        if (std::abs(u) >= half) continue;  // exact zero at and beyond the edges
        const double envelope = std::pow(std::cos(M_PI * u / spec.delta_x), 8);
        psi.amps(j) = envelope * std::polar(1.0, spec.p0 * g.x_nodes(j));
    }
    return normalized(std::move(psi));
}

Wavepacket normalized(Wavepacket psi) {
    const double n = psi.norm();
    if (!(n > 0.0) || !std::isfinite(n))
        throw NumericalError("normalize: wavepacket has zero or non-finite norm");
    psi.amps /= n;
    return psi;
}

namespace {

double weighted_mean(const Eigen::VectorXd& nodes, const Wavepacket& psi) {
    const Eigen::VectorXd rho = psi.density();
    const double total = rho.sum();
    if (!(total > 0.0))
        throw NumericalError("mean: wavepacket has zero mass");
    return nodes.dot(rho) / total;
}

} // namespace

double mean_position(const Wavepacket& psi) {
    if (psi.rep != Rep::Position) throw ShapeError("mean_position: needs position representation");
    return weighted_mean(psi.grid.x_nodes, psi);
}

double mean_momentum(const Wavepacket& psi) {
    if (psi.rep != Rep::Momentum) throw ShapeError("mean_momentum: needs momentum representation");
    return weighted_mean(psi.grid.p_nodes, psi);
}

} // namespace salpeter
