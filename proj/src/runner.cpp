#include "salpeter/runner.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>

#include "salpeter/csv.hpp"
#include "salpeter/delta_check.hpp"
#include "salpeter/fourier.hpp"
#include "salpeter/kernel.hpp"
#include "salpeter/propagate.hpp"
#include "salpeter/version.hpp"

namespace salpeter {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct RunContext {
    RunContext(const Scenario& s, const RunOptions& o, Grid g)
        : scenario(s), options(o), grid(std::move(g)) {}

    const Scenario& scenario;
    const RunOptions& options;
    Grid grid;
    std::string cache_dir;
    std::atomic<int> cache_hits{0};
    std::atomic<int> cache_misses{0};
    std::mutex warn_mutex;
    std::vector<std::string> warnings;
    json extras = json::object();

    void warn(const std::string& msg) {
        std::lock_guard<std::mutex> lock(warn_mutex);
        warnings.push_back(msg);
        if (!options.quiet) std::cerr << "[warn] " << msg << "\n";
    }

    EigenBasis basis_for(const Potential& pot) {
        bool hit = false;
        EigenBasis basis =
            load_or_diagonalize(grid, pot, scenario.units, cache_dir, &hit);
        (hit ? cache_hits : cache_misses)++;
        if (!options.quiet)
            std::cerr << "[cache] " << (hit ? "hit " : "miss") << " key="
                      << std::hex << physics_hash(grid, pot, scenario.units) << std::dec
                      << " (" << describe(pot) << ")\n";
        return basis;
    }
};

// Probability within five nodes of either box edge; periodic wrap-around
// contaminates the run when a packet gets this close.
void edge_guard(RunContext& ctx, const Wavepacket& psi_pos, double t, const std::string& label) {
    const int n = psi_pos.grid.n;
    double mass = 0.0;
    for (int j = 0; j < 5; ++j) mass += std::norm(psi_pos.amps(j));
    for (int j = n - 5; j < n; ++j) mass += std::norm(psi_pos.amps(j));
    mass *= psi_pos.grid.dx;
    if (mass > 1e-8) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "%s t=%g: probability within 5 nodes of the box edges is %.3e (> 1e-8); "
                      "results may be contaminated by wrap-around",
                      label.c_str(), t, mass);
        ctx.warn(buf);
    }
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, count));
    if (threads == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(threads);
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            try {
                for (int i = next++; i < count; i = next++) fn(i);
            } catch (...) {
                failures[w] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& f : failures)
        if (f) std::rethrow_exception(f);
}

std::string cell(double v) { return format_float(v); }

// --- subcommands -----------------------------------------------------------

std::string run_eigen(RunContext& ctx, const std::string& csv_path) {
    const EigenBasis basis = ctx.basis_for(ctx.scenario.potential);
    CsvWriter csv(csv_path, {"n", "eps"});
    for (int i = 0; i < basis.eps.size(); ++i)
        csv.row({std::to_string(i), cell(basis.eps(i))});
    csv.close();
    ctx.extras["n_eigenvalues"] = basis.eps.size();
    ctx.extras["min_eps"] = basis.eps.minCoeff();
    return csv_path;
}

std::string run_evolve(RunContext& ctx, const std::string& csv_path) {
    const Scenario& s = ctx.scenario;
    const Wavepacket psi0 = cos8_packet(s.packet, ctx.grid);
    const Wavepacket psi0_p = to_momentum(psi0, ctx.grid);
    const Evolution evolution(ctx.basis_for(s.potential), psi0_p);

    const bool stats = s.observables.transmitted_stats;
    if (!stats) {
        // Density snapshots (the default when no observable flag is set).
        CsvWriter csv(csv_path, {"t", "x", "density", "re", "im"});
        for (double t : s.times) {
            const Wavepacket snap = evolution.at_position(t);
            edge_guard(ctx, snap, t, "evolve");
            for (int j = 0; j < ctx.grid.n; ++j)
                csv.row({cell(t), cell(ctx.grid.x_nodes(j)), cell(std::norm(snap.amps(j))),
                         cell(snap.amps(j).real()), cell(snap.amps(j).imag())});
        }
        csv.close();
        return csv_path;
    }

    const double x_cut = transmitted_cut(s.potential);
    ctx.extras["x_cut"] = x_cut;
    std::optional<Evolution> free_ev;
    if (s.observables.free_baseline) free_ev.emplace(ctx.grid, s.units, psi0_p);

    std::vector<std::string> header = {"t", "transmitted_mass", "conditional_mean", "peak_x"};
    if (free_ev)
        header.insert(header.end(),
                      {"transmitted_mass_free", "conditional_mean_free", "peak_x_free"});
    CsvWriter csv(csv_path, header);

    const auto stats_cells = [&](const Wavepacket& snap) {
        const double mass = region_mass(snap, x_cut, ctx.grid.x_max).mass;
        double mean = kNaN, peak = kNaN;
        if (mass > 1e-12) {
            mean = conditional_mean_position(snap, x_cut);
            peak = peak_position(snap, x_cut);
        }
        return std::vector<std::string>{cell(mass), cell(mean), cell(peak)};
    };

    for (double t : s.times) {
        const Wavepacket snap = evolution.at_position(t);
        edge_guard(ctx, snap, t, "evolve");
        std::vector<std::string> row = {cell(t)};
        for (auto& c : stats_cells(snap)) row.push_back(std::move(c));
        if (free_ev)
            for (auto& c : stats_cells(free_ev->at_position(t))) row.push_back(std::move(c));
        csv.row(row);
    }
    csv.close();
    return csv_path;
}

std::string run_olc(RunContext& ctx, const std::string& csv_path) {
    const Scenario& s = ctx.scenario;
    const Wavepacket psi0 = cos8_packet(s.packet, ctx.grid);
    const Wavepacket psi0_p = to_momentum(psi0, ctx.grid);
    const Evolution evolution(ctx.basis_for(s.potential), psi0_p);
    const double right_edge = support_edges(s.packet).second;
    const double x_cut = transmitted_cut(s.potential);

    CsvWriter csv(csv_path, {"t", "fraction"});
    std::vector<OlcRecord> series;
    series.reserve(s.times.size());
    int out_of_window = 0;
    for (double t : s.times) {
        const Wavepacket snap = evolution.at_position(t);
        edge_guard(ctx, snap, t, "olc");
        const OlcRecord rec =
            olc_fraction(snap, right_edge, t, s.units, s.olc_denominator, x_cut);
        if (rec.out_of_window) ++out_of_window;
        series.push_back(rec);
        csv.row({cell(t), cell(rec.fraction)});
    }
    csv.close();

    const auto [t_star, f_star] = olc_global_max(series);
    ctx.extras["global_max"] = {{"t", t_star}, {"fraction", f_star}};
    ctx.extras["right_support_edge"] = right_edge;
    ctx.extras["out_of_window_records"] = out_of_window;
    if (out_of_window > 0)
        ctx.warn("olc: " + std::to_string(out_of_window) +
                 " record(s) had the light cone beyond the box edge (fraction reported as 0)");
    return csv_path;
}

std::string run_scan(RunContext& ctx, const std::string& csv_path) {
    const Scenario& s = ctx.scenario;
    if (!s.scan) throw ConfigError("scan: scenario has no scan section");
    const ScanParams& scan = *s.scan;

    struct Row {
        double l, v0, t_star, f_star;
    };
    const int n_combos = static_cast<int>(scan.l_values.size() * scan.v0_values.size());
    std::vector<Row> rows(n_combos);

    parallel_for(n_combos, ctx.options.threads, [&](int idx) {
        const double length = scan.l_values[idx / scan.v0_values.size()];
        const double v0 = scan.v0_values[idx % scan.v0_values.size()];
        const Potential pot = with_barrier(s.potential, v0, length);

        PacketSpec packet = s.packet;
        if (scan.x0_offset) packet.x0 = -(length / 2.0 + *scan.x0_offset);
        const Wavepacket psi0 = cos8_packet(packet, ctx.grid);
        const Wavepacket psi0_p = to_momentum(psi0, ctx.grid);
        const Evolution evolution(ctx.basis_for(pot), psi0_p);

        const double right_edge = support_edges(packet).second;
        const double x_cut = transmitted_cut(pot);
        char label[64];
        std::snprintf(label, sizeof(label), "scan[L=%g,V0=%g]", length, v0);

        std::vector<OlcRecord> series;
        series.reserve(s.times.size());
        for (double t : s.times) {
            const Wavepacket snap = evolution.at_position(t);
            edge_guard(ctx, snap, t, label);
            series.push_back(
                olc_fraction(snap, right_edge, t, s.units, s.olc_denominator, x_cut));
        }
        const auto [t_star, f_star] = olc_global_max(series);
        rows[idx] = {length, v0, t_star, f_star};
    });

    CsvWriter csv(csv_path, {"L", "V0", "t_star", "f_star"});
    for (const Row& r : rows)
        csv.row({cell(r.l), cell(r.v0), cell(r.t_star), cell(r.f_star)});
    csv.close();
    ctx.extras["n_combos"] = n_combos;
    return csv_path;
}

std::string run_delta_check(RunContext& ctx, const std::string& csv_path) {
    const Scenario& s = ctx.scenario;
    const DeltaParams delta = s.delta.value_or(DeltaParams{});

    struct Row {
        double length;
        DeltaComparison cmp;
    };
    std::vector<Row> rows;

    if (std::holds_alternative<NarrowDelta>(s.potential.shape)) {
        rows.push_back({0.0, DeltaComparison{}});
    } else if (const auto* r = std::get_if<Rectangular>(&s.potential.shape)) {
        const double coupling = r->v0 * r->length;  // held fixed across widths
        for (double k : delta.l_over_dx) {
            const double length = k * ctx.grid.dx;
            rows.push_back({length, DeltaComparison{}});
            if (!(coupling > 0.0))
                throw ConfigError("delta-check: potential.v0 * potential.length must be positive");
        }
    } else {
        throw ConfigError(
            "delta-check: potential must be rectangular or narrow_delta (the smooth barrier has "
            "no narrow-width limit form here)");
    }

    for (auto& row : rows) {
        Potential pot = s.potential;
        if (const auto* r = std::get_if<Rectangular>(&s.potential.shape))
            pot = Potential{Rectangular{r->v0 * r->length / row.length, row.length}};
        const EigenBasis basis = ctx.basis_for(pot);

        int nearest = 0;
        (basis.eps.array() - delta.target_eps).abs().minCoeff(&nearest);
        row.cmp = compare_to_delta_limit(basis, nearest, ctx.grid, s.units);
        if (row.length > ctx.grid.dx * (1.0 + 1e-12))
            ctx.warn("delta-check: L = " + format_float(row.length) +
                     " exceeds dx; the narrow-barrier form is only asymptotic there");
    }

    CsvWriter csv(csv_path, {"L", "eps_n", "rel_l2_error", "scale_re", "scale_im"});
    for (const Row& row : rows)
        csv.row({cell(row.length), cell(row.cmp.eps_n), cell(row.cmp.rel_l2_error),
                 cell(row.cmp.scale.real()), cell(row.cmp.scale.imag())});
    csv.close();
    ctx.extras["target_eps"] = delta.target_eps;
    return csv_path;
}

} // namespace

RunResult run(const Scenario& s, const std::string& subcommand, const RunOptions& opt) {
    const auto t_begin = std::chrono::steady_clock::now();

    const std::vector<std::string> errors = validate(s);
    if (!errors.empty()) {
        std::string joined = "scenario validation failed:";
        for (const auto& e : errors) joined += "\n  - " + e;
        throw ConfigError(joined);
    }

    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(opt.out_dir, ec);
    if (ec) throw IoError("run: cannot create output directory " + opt.out_dir);

    RunContext ctx(s, opt, make_grid(s.grid.x_min, s.grid.x_max, s.grid.n_points));
    if (opt.use_cache) {
        ctx.cache_dir =
            opt.cache_dir.empty() ? (fs::path(opt.out_dir) / "cache").string() : opt.cache_dir;
        fs::create_directories(ctx.cache_dir, ec);
        if (ec) throw IoError("run: cannot create cache directory " + ctx.cache_dir);
    }

    const std::string csv_path = (fs::path(opt.out_dir) / (subcommand + ".csv")).string();
    std::string written;
    if (subcommand == "eigen")
        written = run_eigen(ctx, csv_path);
    else if (subcommand == "evolve")
        written = run_evolve(ctx, csv_path);
    else if (subcommand == "olc")
        written = run_olc(ctx, csv_path);
    else if (subcommand == "scan")
        written = run_scan(ctx, csv_path);
    else if (subcommand == "delta-check")
        written = run_delta_check(ctx, csv_path);
    else
        throw ArgumentError("run: unknown subcommand '" + subcommand + "'");

    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin).count();

    RunResult result;
    result.csv_path = written;
    result.cache_hits = ctx.cache_hits;
    result.cache_misses = ctx.cache_misses;
    result.warnings = ctx.warnings;

    char hash_hex[20];
    std::snprintf(hash_hex, sizeof(hash_hex), "%016llx",
                  static_cast<unsigned long long>(scenario_hash(s)));

    json manifest;
    manifest["scenario"] = s.name;
    manifest["scenario_hash"] = hash_hex;
    manifest["subcommand"] = subcommand;
    manifest["csv"] = fs::path(written).filename().string();
    manifest["float_format"] = "%.17g";
    manifest["csv_line_ending"] = "CRLF";
    manifest["versions"] = {{"salpeter", kVersion},
                            {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                                          std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                          std::to_string(EIGEN_MINOR_VERSION)}};
    manifest["wall_time_s"] = wall;
    manifest["cache"] = {{"enabled", opt.use_cache},
                         {"hits", result.cache_hits},
                         {"misses", result.cache_misses}};
    manifest["warnings"] = result.warnings;
    if (!ctx.extras.empty()) manifest["details"] = ctx.extras;

    result.manifest_path = fs::path(opt.out_dir) / (subcommand + "_manifest.json");
    std::ofstream mf(result.manifest_path, std::ios::binary | std::ios::trunc);
    if (!mf) throw IoError("run: cannot write manifest " + result.manifest_path.string());
    mf << manifest.dump(2) << "\n";
    if (!mf) throw IoError("run: manifest write failure");

    return result;
}

} // namespace salpeter
