// reflectal: predict complete-reflection control frequencies semiclassically
// and verify them with coupled-channel wavepacket propagation.
#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "reflectal/commands.hpp"
#include "reflectal/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Laser control of photodissociation branching via complete reflection"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    unsigned workers = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "run configuration (JSON)")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--out", out_dir, "output directory (default: config output_dir)");
        cmd->add_option("--workers", workers, "parallel propagations (scan)");
    };

    auto* eigen = app.add_subcommand("eigen", "vibrational levels of the ground state");
    add_common(eigen);
    auto* manifold =
        app.add_subcommand("manifold", "complete-reflection manifolds and roots");
    add_common(manifold);
    auto* scan = app.add_subcommand("scan", "branching vs laser frequency (quantum)");
    add_common(scan);
    auto* propagate = app.add_subcommand("propagate", "single-frequency trajectory");
    add_common(propagate);

    CLI11_PARSE(app, argc, argv);

    try {
        const reflectal::RunConfig config = reflectal::load_config(config_path);
        const std::string out = out_dir.empty() ? config.output_dir : out_dir;
        if (eigen->parsed()) return reflectal::cmd_eigen(config, out);
        if (manifold->parsed()) return reflectal::cmd_manifold(config, out);
        if (scan->parsed()) return reflectal::cmd_scan(config, out, workers);
        if (propagate->parsed()) return reflectal::cmd_propagate(config, out);
    } catch (const reflectal::WindowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return reflectal::kExitEmptyResult;
    } catch (const reflectal::InstabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return reflectal::kExitUnstable;
    } catch (const reflectal::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return reflectal::kExitPrecondition;
    }
    return reflectal::kExitPrecondition;
}
