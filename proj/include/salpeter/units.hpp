#pragma once

#include "salpeter/errors.hpp"

namespace salpeter {

/// Natural units. The defaults give hbar = c = 1 and a Compton wavelength
/// hbar/(m c) of one, which is the length scale of the whole problem.
struct Units {
    double hbar = 1.0;
    double c = 1.0;
    double mass = 1.0;
};

inline double rest_energy(const Units& u) { return u.mass * u.c * u.c; }

inline void validate_units(const Units& u) {
    if (!(u.hbar > 0.0) || !(u.c > 0.0) || !(u.mass > 0.0))
        throw ConfigError("units: hbar, c and mass must all be strictly positive");
}

} // namespace salpeter
