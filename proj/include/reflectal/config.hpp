// Declarative run configuration: JSON with unit-annotated quantities,
// resolved to atomic units at load time.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "reflectal/curves.hpp"
#include "reflectal/tdse.hpp"

namespace reflectal {

struct TableSource {
    double mass = 0.0;                      // au
    std::array<std::string, 4> potential;   // file per channel
    std::array<std::string, 3> dipole;      // mu12, mu13, mu14
    std::array<Asymptote, 3> asymptote = {Asymptote::I, Asymptote::Istar, Asymptote::I};
    double r_lo = 0.0;
    double r_hi = 0.0;
};

struct ScanSpec {
    double omega_min = 0.0;  // hartree
    double omega_max = 0.0;
    std::size_t samples = 0;
};

struct ManifoldSpec {
    std::vector<int> channels = {2, 3, 4};
    std::vector<int> v_list = {3, 4, 5};
    double omega_min = 0.0;
    double omega_max = 0.0;
    std::size_t samples = 2000;
    double alignment_tolerance = 2e-4;  // hartree
};

struct RunConfig {
    // curve source: exactly one of the two
    std::optional<SurrogateParams> surrogate;
    std::optional<TableSource> tables;

    double grid_r_min = 0.5;  // bohr
    double grid_r_max = 10.0;
    std::size_t grid_n = 2048;

    double f0 = 0.0;                  // au
    std::optional<double> omega;      // hartree, single-frequency modes
    std::optional<ScanSpec> scan;     // scan mode
    double ramp_cycles = 10.0;

    int initial_v = 0;
    std::size_t n_states = 8;

    PropagationConfig propagation;

    ManifoldSpec manifold;

    std::string output_dir = "out";

    nlohmann::json resolved;  // canonical form embedded in every output header
};

/// Parse and resolve a config file; throws ConfigError / ParseError.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const nlohmann::json& j);

/// Materialize the configured curve source.
CurveSet build_curves(const RunConfig& config);

/// One-line header comment carrying the resolved config.
std::string config_header(const RunConfig& config);

}  // namespace reflectal
