#include "reflectal/commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <thread>
#include <vector>

#include "reflectal/bound.hpp"
#include "reflectal/errors.hpp"
#include "reflectal/observe.hpp"
#include "reflectal/units.hpp"
#include "reflectal/zn.hpp"

namespace reflectal {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double to_ev(double hartree) {
    return hartree / units::constants::hartree_per_ev;
}

std::ofstream open_output(const std::string& out_dir, const std::string& name,
                          const RunConfig& config) {
    std::filesystem::create_directories(out_dir);
    const auto path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << config_header(config) << "\n";
    return out;
}

std::vector<VibrationalState> solve_states(const CurveSet& curves,
                                           const RadialGrid& grid,
                                           std::size_t n_states) {
    return eigensolve(curves.v[0], curves.mass, grid, n_states);
}

}  // namespace

int cmd_eigen(const RunConfig& config, const std::string& out_dir) {
    const CurveSet curves = build_curves(config);
    const RadialGrid grid(config.grid_r_min, config.grid_r_max, config.grid_n);

    std::vector<VibrationalState> states;
    try {
        states = solve_states(curves, grid, config.n_states);
    } catch (const ResolutionError& e) {
        std::cerr << "eigen: " << e.what() << "\n";
        return kExitPrecondition;
    }

    auto levels = open_output(out_dir, "levels.csv", config);
    levels << "v,E_v_eV\n";
    for (const auto& st : states) {
        levels << st.v << "," << fmt(to_ev(st.energy)) << "\n";
    }

    for (const auto& st : states) {
        auto out = open_output(out_dir, "eigenstate_v" + std::to_string(st.v) + ".csv",
                               config);
        out << "# E_v_hartree = " << fmt(st.energy) << "\n";
        out << "R,chi_v\n";
        for (std::size_t i = 0; i < st.chi.size(); ++i) {
            out << fmt(grid.point(i)) << "," << fmt(st.chi[i]) << "\n";
        }
    }
    return kExitOk;
}

int cmd_manifold(const RunConfig& config, const std::string& out_dir) {
    const CurveSet curves = build_curves(config);
    const RadialGrid grid(config.grid_r_min, config.grid_r_max, config.grid_n);
    const ManifoldSpec& spec = config.manifold;
    if (!(spec.omega_max > spec.omega_min)) {
        std::cerr << "manifold: needs omega_min < omega_max\n";
        return kExitPrecondition;
    }

    int v_max = 0;
    for (int v : spec.v_list) v_max = std::max(v_max, v);
    std::vector<VibrationalState> states;
    try {
        states = solve_states(curves, grid, static_cast<std::size_t>(v_max) + 1);
    } catch (const ResolutionError& e) {
        std::cerr << "manifold: " << e.what() << "\n";
        return kExitPrecondition;
    }

    bool any_window = false;
    // curves indexed [v][channel]
    std::vector<std::vector<std::optional<zn::ManifoldCurve>>> results(
        spec.v_list.size(), std::vector<std::optional<zn::ManifoldCurve>>(5));

    for (std::size_t iv = 0; iv < spec.v_list.size(); ++iv) {
        const int v = spec.v_list[iv];
        const double e_v = states[static_cast<std::size_t>(v)].energy;
        for (int channel : spec.channels) {
            zn::ManifoldCurve curve;
            try {
                curve = zn::manifold(curves, channel, v, e_v,
                                     {spec.omega_min, spec.omega_max}, spec.samples,
                                     config.f0);
            } catch (const WindowError&) {
                continue;
            }
            any_window = true;

            const std::string tag =
                "ch" + std::to_string(channel) + "_v" + std::to_string(v);
            auto out = open_output(out_dir, "manifold_" + tag + ".csv", config);
            for (const auto& gap : curve.gaps) {
                out << "# gap: " << fmt(to_ev(gap.first)) << " "
                    << fmt(to_ev(gap.second)) << "\n";
            }
            out << "omega_eV,psi_over_pi,P\n";
            // Sample rows merged with the refined roots, in frequency order.
            std::size_t next_root = 0;
            auto write_roots_before = [&](double omega_limit) {
                while (next_root < curve.roots.size() &&
                       curve.roots[next_root].omega <= omega_limit) {
                    const auto& root = curve.roots[next_root++];
                    out << fmt(to_ev(root.omega)) << ","
                        << fmt(static_cast<double>(root.n) + 0.5) << ","
                        << fmt(root.transmission) << "\n";
                }
            };
            for (std::size_t i = 0; i < curve.omega.size(); ++i) {
                if (!curve.valid[i]) continue;
                write_roots_before(curve.omega[i]);
                out << fmt(to_ev(curve.omega[i])) << "," << fmt(curve.psi_over_pi[i])
                    << "," << fmt(curve.transmission[i]) << "\n";
            }
            write_roots_before(curve.omega.back());

            auto roots = open_output(out_dir, "roots_" + tag + ".csv", config);
            roots << "n,omega_eV\n";
            for (const auto& root : curve.roots) {
                roots << root.n << "," << fmt(to_ev(root.omega)) << "\n";
            }
            results[iv][static_cast<std::size_t>(channel)] = std::move(curve);
        }
    }
    if (!any_window) {
        std::cerr << "manifold: no valid frequency window for any requested state\n";
        return kExitEmptyResult;
    }

    // Alignment report: simultaneous H+I suppression (channels 2 and 4) plus
    // the single-channel roots that block the H+I* channel 3.
    auto report = open_output(out_dir, "alignment.csv", config);
    report << "v,omega_eV,quality,n_ch2,n_ch4\n";
    for (std::size_t iv = 0; iv < spec.v_list.size(); ++iv) {
        const auto& m2 = results[iv][2];
        const auto& m4 = results[iv][4];
        if (!m2 || !m4) continue;
        const auto candidates =
            zn::find_control_frequency(*m2, *m4, spec.alignment_tolerance);
        for (const auto& cand : candidates) {
            report << spec.v_list[iv] << "," << fmt(to_ev(cand.omega)) << ","
                   << fmt(cand.quality) << "," << cand.n_first << "," << cand.n_second
                   << "\n";
        }
    }

    auto blocking = open_output(out_dir, "blocking_ch3.csv", config);
    blocking << "v,n,omega_eV\n";
    for (std::size_t iv = 0; iv < spec.v_list.size(); ++iv) {
        const auto& m3 = results[iv][3];
        if (!m3) continue;
        for (const auto& root : m3->roots) {
            blocking << spec.v_list[iv] << "," << root.n << "," << fmt(to_ev(root.omega))
                     << "\n";
        }
    }
    return kExitOk;
}

namespace {

struct ScanRow {
    double omega = 0.0;
    std::array<double, 3> j{};
    double grid_norm = 0.0;
    bool unstable = false;
};

ScanRow run_one(const RunConfig& config, const CurveSet& curves,
                const RadialGrid& grid, const VibrationalState& initial,
                double omega) {
    ScanRow row;
    row.omega = omega;
    FieldSpec field;
    field.f0 = config.f0;
    field.omega = omega;
    field.ramp = config.ramp_cycles * 2.0 * kPi / omega;
    Propagator prop(curves, grid, field, config.propagation);
    try {
        const PropagationResult result = prop.propagate(initial);
        row.j = result.flux.final_fluxes();
        row.grid_norm = prop.total_norm(result.final_state);
    } catch (const InstabilityError&) {
        row.unstable = true;
    }
    return row;
}

}  // namespace

int cmd_scan(const RunConfig& config, const std::string& out_dir, unsigned workers) {
    if (!config.scan) {
        std::cerr << "scan: config needs field.omega_scan\n";
        return kExitPrecondition;
    }
    const ScanSpec& scan = *config.scan;
    const CurveSet curves = build_curves(config);
    const RadialGrid grid(config.grid_r_min, config.grid_r_max, config.grid_n);

    std::vector<VibrationalState> states;
    try {
        states = solve_states(curves, grid,
                              static_cast<std::size_t>(config.initial_v) + 1);
    } catch (const ResolutionError& e) {
        std::cerr << "scan: " << e.what() << "\n";
        return kExitPrecondition;
    }
    const VibrationalState& initial = states.back();

    std::vector<double> omegas(scan.samples);
    for (std::size_t i = 0; i < scan.samples; ++i) {
        omegas[i] = (scan.samples == 1)
                        ? scan.omega_min
                        : scan.omega_min + (scan.omega_max - scan.omega_min) *
                                               static_cast<double>(i) /
                                               static_cast<double>(scan.samples - 1);
    }

    std::vector<ScanRow> rows(scan.samples);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= omegas.size()) break;
            rows[i] = run_one(config, curves, grid, initial, omegas[i]);
        }
    };
    const unsigned n_workers = std::max(1u, workers);
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    auto out = open_output(out_dir, "branching.csv", config);
    out << "omega_eV,J2,J3,J4,P_I,P_Istar,ratio\n";
    auto diag = open_output(out_dir, "scan_diagnostics.csv", config);
    diag << "omega_eV,flux_sum,grid_norm,balance,status\n";
    for (const auto& row : rows) {
        if (row.unstable) {
            out << "# unstable: omega_eV=" << fmt(to_ev(row.omega)) << "\n";
            diag << fmt(to_ev(row.omega)) << ",nan,nan,nan,unstable\n";
            continue;
        }
        FluxRecord rec;
        rec.j_int[0].push_back(row.j[0]);
        rec.j_int[1].push_back(row.j[1]);
        rec.j_int[2].push_back(row.j[2]);
        const Branching b = branching(rec);
        out << fmt(to_ev(row.omega)) << "," << fmt(row.j[0]) << "," << fmt(row.j[1])
            << "," << fmt(row.j[2]) << "," << fmt(b.p_i) << "," << fmt(b.p_istar) << ",";
        if (b.ratio_infinite) {
            out << "inf";
        } else {
            out << fmt(b.ratio);
        }
        out << "\n";
        const double flux_sum = row.j[0] + row.j[1] + row.j[2];
        diag << fmt(to_ev(row.omega)) << "," << fmt(flux_sum) << ","
             << fmt(row.grid_norm) << "," << fmt(flux_sum + row.grid_norm) << ",ok\n";
    }
    return kExitOk;
}

int cmd_propagate(const RunConfig& config, const std::string& out_dir) {
    if (!config.omega) {
        std::cerr << "propagate: config needs field.omega\n";
        return kExitPrecondition;
    }
    const CurveSet curves = build_curves(config);
    const RadialGrid grid(config.grid_r_min, config.grid_r_max, config.grid_n);

    std::vector<VibrationalState> states;
    try {
        states = solve_states(curves, grid,
                              static_cast<std::size_t>(config.initial_v) + 1);
    } catch (const ResolutionError& e) {
        std::cerr << "propagate: " << e.what() << "\n";
        return kExitPrecondition;
    }

    FieldSpec field;
    field.f0 = config.f0;
    field.omega = *config.omega;
    field.ramp = config.ramp_cycles * 2.0 * kPi / field.omega;
    Propagator prop(curves, grid, field, config.propagation);

    PropagationResult result;
    try {
        result = prop.propagate(states.back());
    } catch (const InstabilityError& e) {
        std::cerr << "propagate: " << e.what() << "\n";
        return kExitUnstable;
    }

    auto out = open_output(out_dir, "trajectory.csv", config);
    out << "t_fs,norm1,norm2,norm3,norm4,J2,J3,J4\n";
    for (std::size_t i = 0; i < result.t.size(); ++i) {
        out << fmt(result.t[i] / units::constants::autime_per_fs);
        for (int c = 0; c < 4; ++c) {
            out << "," << fmt(result.norms[i][static_cast<std::size_t>(c)]);
        }
        for (int c = 0; c < 3; ++c) {
            out << "," << fmt(result.flux.j_int[static_cast<std::size_t>(c)][i]);
        }
        out << "\n";
    }
    return kExitOk;
}

}  // namespace reflectal
