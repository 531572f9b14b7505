#include "salpeter/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "salpeter/csv.hpp"
#include "salpeter/grid.hpp"

namespace salpeter {

using nlohmann::json;

namespace {

constexpr int kMaxGridPoints = 4096;  // dense full-spectrum solver cap

double require_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(path + ": expected a number");
    return j.get<double>();
}

std::vector<double> parse_times(const json& j, const std::string& path) {
    // Either an explicit array or {"start", "stop", "step"}.
    std::vector<double> times;
    if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i)
            times.push_back(require_number(j[i], path + "[" + std::to_string(i) + "]"));
        return times;
    }
    if (j.is_object() && j.contains("start") && j.contains("stop") && j.contains("step")) {
        const double start = require_number(j.at("start"), path + ".start");
        const double stop = require_number(j.at("stop"), path + ".stop");
        const double step = require_number(j.at("step"), path + ".step");
        if (!(step > 0.0)) throw ConfigError(path + ".step: must be positive");
        if (stop < start) throw ConfigError(path + ": stop must be >= start");
        const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (int i = 0; i < count; ++i) times.push_back(start + i * step);
        return times;
    }
    throw ConfigError(path + ": expected an array or {start, stop, step}");
}

Potential parse_potential(const json& j) {
    if (!j.is_object()) throw ConfigError("potential: expected an object");
    const std::string type = j.value("type", "");
    // Construction via the raw variants: range validation is deferred to
    // validate() so that every failure is reported in one pass.
    if (type == "rectangular")
        return Potential{Rectangular{j.value("v0", 0.0), j.value("length", 0.0)}};
    if (type == "smooth_tanh")
        return Potential{SmoothTanh{j.value("v0", 0.0), j.value("length", 0.0), j.value("alpha", 0.0)}};
    if (type == "narrow_delta") return Potential{NarrowDelta{j.value("strength", 0.0)}};
    throw ConfigError("potential.type: unknown type '" + type +
                      "' (expected rectangular, smooth_tanh or narrow_delta)");
}

json to_json(const Potential& v) {
    json j;
    if (const auto* r = std::get_if<Rectangular>(&v.shape)) {
        j["type"] = "rectangular";
        j["v0"] = r->v0;
        j["length"] = r->length;
    } else if (const auto* s = std::get_if<SmoothTanh>(&v.shape)) {
        j["type"] = "smooth_tanh";
        j["v0"] = s->v0;
        j["length"] = s->length;
        j["alpha"] = s->alpha;
    } else {
        j["type"] = "narrow_delta";
        j["strength"] = std::get<NarrowDelta>(v.shape).strength;
    }
    return j;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

Scenario parse_scenario(const std::string& json_text, const std::string& name) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("scenario: invalid JSON: " + std::string(e.what()));
    }
    if (!j.is_object()) throw ConfigError("scenario: top level must be an object");

    Scenario s;
    s.name = name;

    const json grid = j.value("grid", json::object());
    s.grid.x_min = grid.value("x_min", 0.0);
    s.grid.x_max = grid.value("x_max", 0.0);
    s.grid.n_points = grid.value("n_points", 0);

    const json units = j.value("units", json::object());
    s.units.mass = units.value("mass", 1.0);
    s.units.hbar = units.value("hbar", 1.0);
    s.units.c = units.value("c", 1.0);

    if (!j.contains("potential")) throw ConfigError("potential: section is required");
    s.potential = parse_potential(j.at("potential"));

    const json packet = j.value("packet", json::object());
    s.packet.x0 = packet.value("x0", 0.0);
    s.packet.p0 = packet.value("p0", 0.0);
    s.packet.delta_x = packet.value("delta_x", 0.0);

    if (j.contains("times")) s.times = parse_times(j.at("times"), "times");

    const json obs = j.value("observables", json::object());
    s.observables.density_snapshots = obs.value("density_snapshots", false);
    s.observables.transmitted_stats = obs.value("transmitted_stats", false);
    s.observables.free_baseline = obs.value("free_baseline", false);

    if (j.contains("scan")) {
        const json& sc = j.at("scan");
        ScanParams scan;
        if (sc.contains("v0_values"))
            for (const auto& v : sc.at("v0_values")) scan.v0_values.push_back(v.get<double>());
        if (sc.contains("l_values"))
            for (const auto& v : sc.at("l_values")) scan.l_values.push_back(v.get<double>());
        if (sc.contains("x0_offset")) scan.x0_offset = sc.at("x0_offset").get<double>();
        s.scan = scan;
    }

    if (j.contains("delta")) {
        const json& d = j.at("delta");
        DeltaParams delta;
        delta.target_eps = d.value("target_eps", 1.02);
        if (d.contains("l_over_dx")) {
            delta.l_over_dx.clear();
            for (const auto& v : d.at("l_over_dx")) delta.l_over_dx.push_back(v.get<double>());
        }
        s.delta = delta;
    }

    const std::string den = j.value("olc_denominator", "total");
    if (den == "total")
        s.olc_denominator = OlcDenominator::Total;
    else if (den == "transmitted")
        s.olc_denominator = OlcDenominator::Transmitted;
    else
        throw ConfigError("olc_denominator: expected 'total' or 'transmitted', got '" + den + "'");

    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("scenario: cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string stem = std::filesystem::path(path).stem().string();
    return parse_scenario(buf.str(), stem);
}

std::string apply_override(const std::string& json_text, const std::string& key_value) {
    const auto eq = key_value.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("override: expected key=value, got '" + key_value + "'");
    const std::string key = key_value.substr(0, eq);
    const std::string value = key_value.substr(eq + 1);

    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("scenario: invalid JSON: " + std::string(e.what()));
    }

    // Dotted path -> JSON pointer; missing intermediate objects are created.
    std::string pointer;
    std::stringstream keys(key);
    std::string part;
    while (std::getline(keys, part, '.')) {
        if (part.empty()) throw ConfigError("override: empty path segment in '" + key + "'");
        pointer += "/" + part;
    }
    json parsed;
    try {
        parsed = json::parse(value);
    } catch (const json::parse_error&) {
        parsed = value;  // plain string
    }
    j[json::json_pointer(pointer)] = parsed;
    return j.dump();
}

std::vector<std::string> validate(const Scenario& s) {
    std::vector<std::string> errors;
    const auto fail = [&errors](const std::string& msg) { errors.push_back(msg); };

    // grid
    if (!(s.grid.x_max > s.grid.x_min)) fail("grid.x_max: must be greater than grid.x_min");
    if (s.grid.n_points < 8 || s.grid.n_points % 2 != 0)
        fail("grid.n_points: must be even and >= 8");
    if (s.grid.n_points > kMaxGridPoints)
        fail("grid.n_points: exceeds the dense-solver cap of " + std::to_string(kMaxGridPoints));

    // units
    if (!(s.units.mass > 0.0)) fail("units.mass: must be strictly positive");
    if (!(s.units.hbar > 0.0)) fail("units.hbar: must be strictly positive");
    if (!(s.units.c > 0.0)) fail("units.c: must be strictly positive");

    // potential
    if (const auto* r = std::get_if<Rectangular>(&s.potential.shape)) {
        if (r->v0 < 0.0) fail("potential.v0: must be >= 0 (attractive wells unsupported)");
        if (!(r->length > 0.0)) fail("potential.length: must be positive");
    } else if (const auto* t = std::get_if<SmoothTanh>(&s.potential.shape)) {
        if (t->v0 < 0.0) fail("potential.v0: must be >= 0 (attractive wells unsupported)");
        if (!(t->length > 0.0)) fail("potential.length: must be positive");
        if (!(t->alpha > 0.0)) fail("potential.alpha: must be positive");
    } else if (const auto* d = std::get_if<NarrowDelta>(&s.potential.shape)) {
        if (d->strength < 0.0)
            fail("potential.strength: must be >= 0 (attractive wells unsupported)");
    }

    // packet (support and resolution checks need a valid grid)
    if (!(s.packet.delta_x > 0.0)) fail("packet.delta_x: must be positive");
    const bool grid_ok = s.grid.x_max > s.grid.x_min && s.grid.n_points >= 8 &&
                         s.grid.n_points % 2 == 0 && s.grid.n_points <= kMaxGridPoints;
    if (grid_ok && s.packet.delta_x > 0.0) {
        const auto [left, right] = support_edges(s.packet);
        if (!(left > s.grid.x_min && right < s.grid.x_max))
            fail("packet: support [" + format_float(left) + ", " + format_float(right) +
                 "] must lie strictly inside the box");
        const double dx = (s.grid.x_max - s.grid.x_min) / s.grid.n_points;
        if (s.packet.delta_x / dx < 8.0)
            fail("packet.delta_x: support under-resolved (fewer than 8 nodes across it)");
    }

    // times
    if (s.times.empty()) fail("times: must not be empty");
    for (size_t i = 0; i + 1 < s.times.size(); ++i)
        if (s.times[i + 1] < s.times[i]) {
            fail("times: must be sorted ascending");
            break;
        }
    for (double t : s.times)
        if (!std::isfinite(t)) {
            fail("times: entries must be finite");
            break;
        }

    // flags
    if (s.observables.density_snapshots && s.observables.transmitted_stats)
        fail("observables: density_snapshots and transmitted_stats are mutually exclusive");

    // scan
    if (s.scan) {
        if (s.scan->v0_values.empty()) fail("scan.v0_values: must not be empty");
        if (s.scan->l_values.empty()) fail("scan.l_values: must not be empty");
        for (double v0 : s.scan->v0_values)
            if (v0 < 0.0) {
                fail("scan.v0_values: entries must be >= 0");
                break;
            }
        for (double l : s.scan->l_values)
            if (!(l > 0.0)) {
                fail("scan.l_values: entries must be positive");
                break;
            }
        if (std::holds_alternative<NarrowDelta>(s.potential.shape))
            fail("scan: sweeping a narrow_delta barrier is not supported");
        if (s.scan->x0_offset && !(*s.scan->x0_offset > 0.0))
            fail("scan.x0_offset: must be positive");
    }

    // delta
    if (s.delta) {
        if (s.delta->l_over_dx.empty()) fail("delta.l_over_dx: must not be empty");
        for (double k : s.delta->l_over_dx)
            if (!(k > 0.0)) {
                fail("delta.l_over_dx: entries must be positive");
                break;
            }
    }

    return errors;
}

std::string canonical_json(const Scenario& s) {
    json j;
    j["name"] = s.name;
    j["grid"] = {{"x_min", s.grid.x_min}, {"x_max", s.grid.x_max}, {"n_points", s.grid.n_points}};
    j["units"] = {{"hbar", s.units.hbar}, {"c", s.units.c}, {"mass", s.units.mass}};
    j["potential"] = to_json(s.potential);
    j["packet"] = {{"x0", s.packet.x0}, {"p0", s.packet.p0}, {"delta_x", s.packet.delta_x}};
    j["times"] = s.times;
    j["observables"] = {{"density_snapshots", s.observables.density_snapshots},
                        {"transmitted_stats", s.observables.transmitted_stats},
                        {"free_baseline", s.observables.free_baseline}};
    if (s.scan) {
        j["scan"] = {{"v0_values", s.scan->v0_values}, {"l_values", s.scan->l_values}};
        if (s.scan->x0_offset) j["scan"]["x0_offset"] = *s.scan->x0_offset;
    }
    if (s.delta)
        j["delta"] = {{"target_eps", s.delta->target_eps}, {"l_over_dx", s.delta->l_over_dx}};
    j["olc_denominator"] = s.olc_denominator == OlcDenominator::Total ? "total" : "transmitted";
    return j.dump();  // nlohmann keeps object keys sorted: canonical
}

std::uint64_t scenario_hash(const Scenario& s) { return fnv1a(canonical_json(s)); }

} // namespace salpeter
