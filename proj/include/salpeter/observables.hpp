#pragma once

#include <utility>
#include <vector>

#include "salpeter/propagate.hpp"
#include "salpeter/units.hpp"
#include "salpeter/wavepacket.hpp"

namespace salpeter {

struct RegionProbability {
    double lower = 0.0;
    double upper = 0.0;
    double mass = 0.0;
    bool clipped = false;  // bounds fell outside the box and were clipped
};

/// Probability in [a, b): left-endpoint Riemann sum over nodes with
/// a <= x_j < b, consistent with the norm convention. Bounds outside the
/// box are clipped and flagged.
RegionProbability region_mass(const Wavepacket& psi, double a, double b);

struct OlcRecord {
    double t = 0.0;
    double light_cone_pos = 0.0;  // right_support_edge + c*t
    double fraction = 0.0;
    bool out_of_window = false;  // light cone ran past the box edge
};

enum class OlcDenominator { Total, Transmitted };

/// Probability beyond the forward light cone emanating from the right
/// edge of the initial support. The denominator is the total norm by
/// default; OlcDenominator::Transmitted divides by the mass beyond x_cut
/// instead (zero numerator and fraction when that mass vanishes).
OlcRecord olc_fraction(const Wavepacket& psi, double right_edge, double t, const Units& u,
                       OlcDenominator den = OlcDenominator::Total, double x_cut = 0.0);

std::vector<OlcRecord> olc_series(const Evolution& ev, double right_edge,
                                  const std::vector<double>& times,
                                  OlcDenominator den = OlcDenominator::Total,
                                  double x_cut = 0.0);

/// Global maximum (t*, f*) of a series; ties resolve to the first record.
std::pair<double, double> olc_global_max(const std::vector<OlcRecord>& series);

/// Mean position restricted to x_j > x_cut. Throws
/// UndefinedObservableError when the transmitted mass is below 1e-12.
double conditional_mean_position(const Wavepacket& psi, double x_cut);

/// argmax of |psi(x_j)|^2 over x_j > x_cut; ties resolve to the smallest x.
double peak_position(const Wavepacket& psi, double x_cut);

} // namespace salpeter
