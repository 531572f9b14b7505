#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "salpeter/runner.hpp"
#include "salpeter/version.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct CommonArgs {
    std::string scenario_path;
    std::string out_dir = ".";
    std::vector<std::string> overrides;
    int threads = 0;
    bool no_cache = false;
};

int run_subcommand(const std::string& name, const CommonArgs& args) {
    std::ifstream in(args.scenario_path);
    if (!in) {
        std::cerr << "error: cannot open scenario file '" << args.scenario_path << "'\n";
        return kExitIo;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    for (const auto& kv : args.overrides) text = salpeter::apply_override(text, kv);

    const std::string stem = std::filesystem::path(args.scenario_path).stem().string();
    const salpeter::Scenario scenario = salpeter::parse_scenario(text, stem);

    const auto errors = salpeter::validate(scenario);
    if (!errors.empty()) {
        std::cerr << "error: scenario validation failed:\n";
        for (const auto& e : errors) std::cerr << "  - " << e << "\n";
        return kExitConfig;
    }

    salpeter::RunOptions opt;
    opt.out_dir = args.out_dir;
    opt.threads = args.threads;
    opt.use_cache = !args.no_cache;

    const salpeter::RunResult result = salpeter::run(scenario, name, opt);
    std::cerr << "wrote " << result.csv_path.string() << " and "
              << result.manifest_path.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Salpeter-equation wavepacket tunneling simulator"};
    app.set_version_flag("--version", salpeter::kVersion);
    app.require_subcommand(1);

    CommonArgs args;
    const auto add_common = [&args](CLI::App* cmd) {
        cmd->add_option("--scenario", args.scenario_path, "Scenario file (JSON)")->required();
        cmd->add_option("--out", args.out_dir, "Output directory");
        cmd->add_option("--override", args.overrides,
                        "Override a scenario field, e.g. potential.v0=30 (repeatable)");
        cmd->add_option("--threads", args.threads, "Worker threads for scans (0 = all cores)");
        cmd->add_flag("--no-cache", args.no_cache, "Disable the eigenbasis disk cache");
    };

    static const std::vector<std::pair<std::string, std::string>> subcommands = {
        {"eigen", "Diagonalize the scenario Hamiltonian and dump the spectrum"},
        {"evolve", "Propagate the packet and dump density snapshots or transmitted stats"},
        {"olc", "Outside-the-light-cone fraction time series and its global maximum"},
        {"scan", "Map the OLC global maximum over a (V0 x L) sweep"},
        {"delta-check", "Compare eigenvectors against the narrow-barrier analytic shape"},
    };
    for (const auto& [name, help] : subcommands) add_common(app.add_subcommand(name, help));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the error message
        std::cerr << app.help() << "\n";
        return kExitUsage;
    }

    try {
        return run_subcommand(app.get_subcommands().front()->get_name(), args);
    } catch (const salpeter::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const salpeter::NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const salpeter::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
