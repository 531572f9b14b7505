#include "salpeter/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace salpeter {

namespace {

void check_position_rep(const Wavepacket& psi, const char* op) {
    if (psi.rep != Rep::Position)
        throw ShapeError(std::string(op) + ": needs a position-representation wavepacket");
}

} // namespace

RegionProbability region_mass(const Wavepacket& psi, double a, double b) {
    check_position_rep(psi, "region_mass");
    if (!(a < b)) throw ArgumentError("region_mass: need a < b");

    RegionProbability r;
    r.clipped = a < psi.grid.x_min || b > psi.grid.x_max;
    r.lower = std::max(a, psi.grid.x_min);
    r.upper = std::min(b, psi.grid.x_max);

    double sum = 0.0;
    for (int j = 0; j < psi.grid.n; ++j) {
        const double x = psi.grid.x_nodes(j);
        if (x >= r.lower && x < r.upper) sum += std::norm(psi.amps(j));
    }
    r.mass = sum * psi.grid.dx;
    return r;
}

OlcRecord olc_fraction(const Wavepacket& psi, double right_edge, double t, const Units& u,
                       OlcDenominator den, double x_cut) {
    check_position_rep(psi, "olc_fraction");
    OlcRecord rec;
    rec.t = t;
    rec.light_cone_pos = right_edge + u.c * t;

    if (rec.light_cone_pos >= psi.grid.x_max) {
        rec.out_of_window = true;
        return rec;
    }
    const double beyond = region_mass(psi, rec.light_cone_pos, psi.grid.x_max).mass;
    double denom = psi.amps.squaredNorm() * psi.grid.dx;  // total norm
    if (den == OlcDenominator::Transmitted) {
        denom = x_cut < psi.grid.x_max ? region_mass(psi, x_cut, psi.grid.x_max).mass : 0.0;
        if (denom < 1e-12) return rec;  // no transmitted mass to normalize by
    }
    rec.fraction = beyond / denom;
    return rec;
}

std::vector<OlcRecord> olc_series(const Evolution& ev, double right_edge,
                                  const std::vector<double>& times, OlcDenominator den,
                                  double x_cut) {
    for (size_t i = 1; i < times.size(); ++i)
        if (times[i] < times[i - 1])
            throw ConfigError("olc_series: times must be sorted ascending");
    std::vector<OlcRecord> out;
    out.reserve(times.size());
    for (double t : times)
        out.push_back(olc_fraction(ev.at_position(t), right_edge, t, ev.units(), den, x_cut));
    return out;
}

std::pair<double, double> olc_global_max(const std::vector<OlcRecord>& series) {
    if (series.empty()) throw ArgumentError("olc_global_max: empty series");
    const OlcRecord* best = &series.front();
    for (const auto& rec : series)
        if (rec.fraction > best->fraction) best = &rec;  // strict: first occurrence wins
    return {best->t, best->fraction};
}

double conditional_mean_position(const Wavepacket& psi, double x_cut) {
    check_position_rep(psi, "conditional_mean_position");
    double mass = 0.0, weighted = 0.0;
    for (int j = 0; j < psi.grid.n; ++j) {
        const double x = psi.grid.x_nodes(j);
        if (x > x_cut) {
            const double rho = std::norm(psi.amps(j));
            mass += rho;
            weighted += x * rho;
        }
    }
    mass *= psi.grid.dx;
    weighted *= psi.grid.dx;
    if (mass <= 1e-12)
        throw UndefinedObservableError(
            "conditional_mean_position: transmitted mass <= 1e-12, observable undefined");
    return weighted / mass;
}

double peak_position(const Wavepacket& psi, double x_cut) {
    check_position_rep(psi, "peak_position");
    double mass = 0.0;
    double best_rho = -1.0;
    double best_x = 0.0;
    for (int j = 0; j < psi.grid.n; ++j) {
        const double x = psi.grid.x_nodes(j);
        if (x <= x_cut) continue;
        const double rho = std::norm(psi.amps(j));
        mass += rho;
        if (rho > best_rho) {  // strict: ties keep the smallest x
            best_rho = rho;
            best_x = x;
        }
    }
    if (mass * psi.grid.dx <= 1e-12)
        throw UndefinedObservableError(
            "peak_position: transmitted mass <= 1e-12, observable undefined");
    return best_x;
}

} // namespace salpeter
