#include "salpeter/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <unordered_map>

namespace salpeter {

namespace {

// FFTW's planner is not thread-safe; executing a plan on fresh arrays is.
// Plans are created once per length with FFTW_UNALIGNED so they can run on
// any caller buffer.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

PlanPair plans_for(int n) {
    static std::mutex mutex;
    static std::unordered_map<int, PlanPair> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    Eigen::VectorXcd scratch_in(n), scratch_out(n);
    auto* in = reinterpret_cast<fftw_complex*>(scratch_in.data());
    auto* out = reinterpret_cast<fftw_complex*>(scratch_out.data());
    PlanPair p;
    p.fwd = fftw_plan_dft_1d(n, in, out, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.bwd = fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p.fwd || !p.bwd) throw NumericalError("fftw plan creation failed for n=" + std::to_string(n));
    cache.emplace(n, p);
    return p;
}

void check_operand(const Wavepacket& psi, const Grid& g, Rep expected, const char* op) {
    if (psi.rep != expected)
        throw ShapeError(std::string(op) + ": wavepacket is in the wrong representation");
    if (psi.grid != g)
        throw ShapeError(std::string(op) + ": wavepacket grid does not match the given grid");
    if (psi.amps.size() != g.n)
        throw ShapeError(std::string(op) + ": amplitude length " + std::to_string(psi.amps.size()) +
                         " != grid size " + std::to_string(g.n));
}

} // namespace

// psi(p_k) = dx/sqrt(2 pi) e^{-i p_k x_min} sum_j e^{-2 pi i jk/N} (-1)^j psi(x_j).
// The (-1)^j factor re-centers the momentum grid on zero; the x_min phase
// anchors the transform to the continuum convention.
Wavepacket to_momentum(const Wavepacket& psi, const Grid& g) {
    check_operand(psi, g, Rep::Position, "to_momentum");
    const int n = g.n;

    Eigen::VectorXcd in(n), out(n);
    for (int j = 0; j < n; ++j) in(j) = (j & 1) ? -psi.amps(j) : psi.amps(j);

    fftw_execute_dft(plans_for(n).fwd, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));

    const double scale = g.dx / std::sqrt(2.0 * M_PI);
    for (int k = 0; k < n; ++k)
        out(k) *= scale * std::polar(1.0, -g.p_nodes(k) * g.x_min);

    return Wavepacket{std::move(out), Rep::Momentum, psi.time, g};
}

Wavepacket to_position(const Wavepacket& psi, const Grid& g) {
    check_operand(psi, g, Rep::Momentum, "to_position");
    const int n = g.n;

    Eigen::VectorXcd in(n), out(n);
    for (int k = 0; k < n; ++k)
        in(k) = psi.amps(k) * std::polar(1.0, g.p_nodes(k) * g.x_min);

    fftw_execute_dft(plans_for(n).bwd, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));

    const double scale = g.dp / std::sqrt(2.0 * M_PI);
    for (int j = 0; j < n; ++j) out(j) *= (j & 1) ? -scale : scale;

    return Wavepacket{std::move(out), Rep::Position, psi.time, g};
}

} // namespace salpeter
