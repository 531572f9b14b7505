#include "salpeter/propagate.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <utility>

namespace salpeter {

namespace {

using namespace std::complex_literals;

void check_momentum_state(const Wavepacket& psi, const Grid& g, const char* op) {
    if (psi.rep != Rep::Momentum)
        throw ShapeError(std::string(op) + ": initial state must be in momentum representation");
    if (psi.grid != g || psi.amps.size() != g.n)
        throw ShapeError(std::string(op) + ": initial state grid does not match");
}

Eigen::VectorXcd phases(const Eigen::VectorXd& eps, double t, double hbar) {
    Eigen::VectorXcd ph(eps.size());
    for (Eigen::Index i = 0; i < eps.size(); ++i)
        ph(i) = std::polar(1.0, -eps(i) * t / hbar);
    return ph;
}

} // namespace

Wavepacket spectral_propagate(const EigenBasis& basis, const Wavepacket& psi0, double t) {
    check_momentum_state(psi0, basis.grid, "spectral_propagate");
    // c_n = <phi_n, psi0> dp, then psi(t) = sum_n phi_n e^{-i eps_n t} c_n.
    const Eigen::VectorXcd coeffs = basis.vecs.adjoint() * psi0.amps * basis.grid.dp;
    const Eigen::VectorXcd evolved =
        basis.vecs * phases(basis.eps, t, basis.units.hbar).cwiseProduct(coeffs).eval();
    return Wavepacket{evolved, Rep::Momentum, psi0.time + t, basis.grid};
}

Wavepacket free_propagate(const Grid& g, const Wavepacket& psi0, double t, const Units& u) {
    check_momentum_state(psi0, g, "free_propagate");
    Eigen::VectorXcd amps(g.n);
    for (int k = 0; k < g.n; ++k)
        amps(k) = psi0.amps(k) * std::polar(1.0, -dispersion(g.p_nodes(k), u) * t / u.hbar);
    return Wavepacket{std::move(amps), Rep::Momentum, psi0.time + t, g};
}

Evolution::Evolution(EigenBasis basis, const Wavepacket& psi0_momentum)
    : free_(false),
      grid_(basis.grid),
      units_(basis.units),
      eps_(std::move(basis.eps)),
      vecs_(std::move(basis.vecs)),
      t0_(psi0_momentum.time) {
    check_momentum_state(psi0_momentum, grid_, "Evolution");
    coeffs_ = vecs_.adjoint() * psi0_momentum.amps * grid_.dp;
}

Evolution::Evolution(const Grid& g, const Units& u, const Wavepacket& psi0_momentum)
    : free_(true), grid_(g), units_(u), t0_(psi0_momentum.time) {
    check_momentum_state(psi0_momentum, grid_, "Evolution");
    eps_.resize(g.n);
    for (int k = 0; k < g.n; ++k) eps_(k) = dispersion(g.p_nodes(k), u);
    coeffs_ = psi0_momentum.amps;
}

Wavepacket Evolution::at(double t) const {
    const Eigen::VectorXcd ph = phases(eps_, t, units_.hbar).cwiseProduct(coeffs_);
    Eigen::VectorXcd amps = free_ ? ph : Eigen::VectorXcd(vecs_ * ph);
    return Wavepacket{std::move(amps), Rep::Momentum, t0_ + t, grid_};
}

Wavepacket Evolution::at_position(double t) const { return to_position(at(t), grid_); }

std::vector<Wavepacket> evolve_series(const Evolution& ev, const std::vector<double>& times) {
    for (size_t i = 1; i < times.size(); ++i)
        if (times[i] < times[i - 1])
            throw ConfigError("evolve_series: times must be sorted ascending");
    std::vector<Wavepacket> out;
    out.reserve(times.size());
    for (double t : times) out.push_back(ev.at_position(t));
    return out;
}

} // namespace salpeter
