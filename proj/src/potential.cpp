#include "salpeter/potential.hpp"

#include <cmath>
#include <cstdio>

namespace salpeter {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;  // 1/sqrt(2 pi)

// sin(x)/x and sinh(x)/x with series fallbacks near zero.
double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
    }
    return std::sin(x) / x;
}

double sinhc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 * (1.0 + x2 / 20.0);
    }
    return std::sinh(x) / x;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

Potential Potential::rectangular(double v0, double length) {
    if (v0 < 0.0) throw ConfigError("potential: v0 must be >= 0 (attractive wells unsupported)");
    if (!(length > 0.0)) throw ConfigError("potential: length must be positive");
    return Potential{Rectangular{v0, length}};
}

Potential Potential::smooth_tanh(double v0, double length, double alpha) {
    if (v0 < 0.0) throw ConfigError("potential: v0 must be >= 0 (attractive wells unsupported)");
    if (!(length > 0.0)) throw ConfigError("potential: length must be positive");
    if (!(alpha > 0.0)) throw ConfigError("potential: alpha must be positive");
    return Potential{SmoothTanh{v0, length, alpha}};
}

Potential Potential::narrow_delta(double strength) {
    if (strength < 0.0)
        throw ConfigError("potential: strength must be >= 0 (attractive wells unsupported)");
    return Potential{NarrowDelta{strength}};
}

double Potential::barrier_height() const {
    if (const auto* r = std::get_if<Rectangular>(&shape)) return r->v0;
    if (const auto* s = std::get_if<SmoothTanh>(&shape)) return s->v0;
    return 0.0;  // the delta barrier has no finite height
}

double eval_position(const Potential& v, double x) {
    if (const auto* r = std::get_if<Rectangular>(&v.shape)) {
        const double half = r->length / 2.0;
        const double ax = std::abs(x);
        if (ax < half) return r->v0;
        if (ax == half) return r->v0 / 2.0;  // midpoint convention at the edges
        return 0.0;
    }
    if (const auto* s = std::get_if<SmoothTanh>(&v.shape)) {
        const double half = s->length / 2.0;
        return s->v0 / 2.0 *
               (std::tanh(s->alpha * (x + half)) - std::tanh(s->alpha * (x - half)));
    }
    throw UnsupportedError("eval_position: the narrow-delta barrier has no pointwise values");
}

double momentum_element(const Potential& v, double q) {
    if (const auto* r = std::get_if<Rectangular>(&v.shape))
        return r->v0 * r->length * kInvSqrt2Pi * sinc(q * r->length / 2.0);
    if (const auto* s = std::get_if<SmoothTanh>(&v.shape)) {
        const double z = M_PI * q / (2.0 * s->alpha);
        if (std::abs(z) > 700.0) return 0.0;  // sinh would overflow; element underflows
        return s->v0 * s->length * kInvSqrt2Pi * sinc(q * s->length / 2.0) / sinhc(z);
    }
    const auto& d = std::get<NarrowDelta>(v.shape);
    return d.strength * kInvSqrt2Pi;
}

double transmitted_cut(const Potential& v) {
    if (const auto* r = std::get_if<Rectangular>(&v.shape)) return r->length / 2.0;
    if (std::holds_alternative<NarrowDelta>(v.shape)) return 0.0;

    const auto& s = std::get<SmoothTanh>(v.shape);
    const double half = s.length / 2.0;
    if (s.v0 == 0.0) return half;
    const double target = 1e-3 * s.v0;
    // V is strictly decreasing right of the center; bracket and bisect.
    double lo = half;
    double hi = half + 20.0 / s.alpha;
    while (eval_position(v, hi) >= target) hi += 20.0 / s.alpha;
    for (int iter = 0; iter < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++iter) {
        const double mid = 0.5 * (lo + hi);
        (eval_position(v, mid) >= target ? lo : hi) = mid;
    }
    return hi;
}

Potential with_barrier(const Potential& proto, double v0, double length) {
    if (const auto* s = std::get_if<SmoothTanh>(&proto.shape))
        return Potential::smooth_tanh(v0, length, s->alpha);
    if (std::holds_alternative<NarrowDelta>(proto.shape))
        throw UnsupportedError("with_barrier: the narrow delta has no (v0, L) parametrization");
    return Potential::rectangular(v0, length);
}

std::string describe(const Potential& v) {
    if (const auto* r = std::get_if<Rectangular>(&v.shape))
        return "rectangular;v0=" + fmt(r->v0) + ";L=" + fmt(r->length);
    if (const auto* s = std::get_if<SmoothTanh>(&v.shape))
        return "smooth_tanh;v0=" + fmt(s->v0) + ";L=" + fmt(s->length) + ";alpha=" + fmt(s->alpha);
    const auto& d = std::get<NarrowDelta>(v.shape);
    return "narrow_delta;g=" + fmt(d.strength);
}

} // namespace salpeter
