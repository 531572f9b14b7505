#pragma once

#include <string>
#include <variant>

#include "salpeter/errors.hpp"

namespace salpeter {

struct Rectangular {
    double v0 = 0.0;
    double length = 1.0;
};

/// (v0/2) [tanh(alpha (x + L/2)) - tanh(alpha (x - L/2))]
struct SmoothTanh {
    double v0 = 0.0;
    double length = 1.0;
    double alpha = 1.0;
};

/// L -> 0 limit of the rectangular barrier at fixed coupling g = V0 * L.
/// Defined only through its momentum-transfer elements.
struct NarrowDelta {
    double strength = 0.0;
};

/// Repulsive barrier centered at x = 0.
struct Potential {
    std::variant<Rectangular, SmoothTanh, NarrowDelta> shape;

    static Potential rectangular(double v0, double length);
    static Potential smooth_tanh(double v0, double length, double alpha);
    static Potential narrow_delta(double strength);

    double barrier_height() const;
};

/// Barrier value at x. Rectangular uses the midpoint convention v0/2 at
/// |x| = L/2. NarrowDelta has no pointwise values and throws.
double eval_position(const Potential& v, double x);

/// Momentum-transfer element V(q), q = p - p', in the convention
///   V(q) = (2 pi)^(-1/2) \int dx V(x) e^{i q x}        (hbar = 1).
/// Real for every supported variant (even, real barriers):
///   Rectangular:  v0 L / sqrt(2 pi) * sinc(q L / 2)
///   SmoothTanh:   v0 L / sqrt(2 pi) * sinc(q L / 2) / sinhc(pi q / (2 alpha))
///   NarrowDelta:  g / sqrt(2 pi)
double momentum_element(const Potential& v, double q);

/// Right-hand cut separating the transmitted region: L/2 for the
/// rectangular barrier, the point where V(x) first drops below 1e-3 * v0
/// for the tanh barrier, 0 for the narrow delta.
double transmitted_cut(const Potential& v);

/// Canonical parameter string used for hashing and logs.
std::string describe(const Potential& v);

/// Same barrier family as proto with height and width replaced; used by
/// (V0 x L) sweeps. The tanh smoothness parameter is carried over.
Potential with_barrier(const Potential& proto, double v0, double length);

} // namespace salpeter
