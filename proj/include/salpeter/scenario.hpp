#pragma once

#include <optional>
#include <string>
#include <vector>

#include "salpeter/observables.hpp"
#include "salpeter/potential.hpp"
#include "salpeter/units.hpp"
#include "salpeter/wavepacket.hpp"

namespace salpeter {

struct GridParams {
    double x_min = 0.0;
    double x_max = 0.0;
    int n_points = 0;
};

struct ObservableFlags {
    bool density_snapshots = false;
    bool transmitted_stats = false;
    bool free_baseline = false;
};

/// Parameter sweep for olc-maximum maps. When x0_offset is set, the packet
/// center follows the barrier width as x0 = -(L/2 + x0_offset).
struct ScanParams {
    std::vector<double> v0_values;
    std::vector<double> l_values;
    std::optional<double> x0_offset;
};

/// Narrow-barrier comparison controls. Each entry k of l_over_dx selects a
/// rectangular barrier of width k*dx at fixed coupling v0*L.
struct DeltaParams {
    double target_eps = 1.02;
    std::vector<double> l_over_dx = {1.0};
};

struct Scenario {
    std::string name = "scenario";
    GridParams grid;
    Units units;
    Potential potential = Potential::rectangular(0.0, 1.0);
    PacketSpec packet;
    std::vector<double> times;
    ObservableFlags observables;
    std::optional<ScanParams> scan;
    std::optional<DeltaParams> delta;
    OlcDenominator olc_denominator = OlcDenominator::Total;
};

/// Parses a scenario file (JSON, see README for the schema). Throws
/// IoError on filesystem problems and ConfigError on malformed content.
Scenario load_scenario(const std::string& path);

/// Same, from already-parsed text; `name` seeds the output naming.
Scenario parse_scenario(const std::string& json_text, const std::string& name);

/// Applies one `--override key=value` (dotted path into the scenario JSON)
/// before parsing; the value is parsed as JSON with a plain-string fallback.
std::string apply_override(const std::string& json_text, const std::string& key_value);

/// All validation failures at once, each prefixed with its field path.
/// Empty means the scenario is runnable.
std::vector<std::string> validate(const Scenario& s);

/// Stable content hash of the whole scenario (canonical JSON round-trip).
std::uint64_t scenario_hash(const Scenario& s);

/// Canonical JSON text of a scenario (sorted keys, 17-digit floats).
std::string canonical_json(const Scenario& s);

} // namespace salpeter
