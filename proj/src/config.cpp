#include "reflectal/config.hpp"

#include <cmath>
#include <fstream>

#include "reflectal/errors.hpp"
#include "reflectal/units.hpp"

namespace reflectal {

namespace {

using nlohmann::json;
using units::Dimension;

/// A quantity is either {"value": x, "unit": "..."} or a bare number (au).
double quantity(const json& j, const std::string& key, Dimension dim,
                std::optional<double> fallback = std::nullopt) {
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        throw ConfigError("missing config field '" + key + "'");
    }
    const json& q = j.at(key);
    if (q.is_number()) return q.get<double>();
    if (!q.is_object() || !q.contains("value") || !q.contains("unit")) {
        throw ConfigError("field '" + key + "' must be a number or {value, unit}");
    }
    const auto unit = units::parse_unit(q.at("unit").get<std::string>(), dim);
    return q.at("value").get<double>() * units::atomic_factor(unit);
}

double plain(const json& j, const std::string& key, double fallback) {
    return j.contains(key) ? j.at(key).get<double>() : fallback;
}

Asymptote parse_asymptote(const std::string& s) {
    if (s == "I") return Asymptote::I;
    if (s == "I*" || s == "Istar") return Asymptote::Istar;
    throw ConfigError("channel asymptote must be 'I' or 'I*'");
}

SurrogateParams parse_surrogate(const json& j) {
    SurrogateParams p;
    if (j.contains("mass")) {
        p.mass_amu = quantity(j, "mass", Dimension::Mass) /
                     units::constants::aumass_per_amu;
    }
    if (j.contains("ground")) {
        const json& g = j.at("ground");
        p.ground.d_e = quantity(g, "d_e", Dimension::Energy, p.ground.d_e);
        p.ground.a = plain(g, "a", p.ground.a);
        p.ground.r_e = quantity(g, "r_e", Dimension::Length, p.ground.r_e);
        p.ground.v_min = quantity(g, "v_min", Dimension::Energy, p.ground.v_min);
    }
    for (int c = 0; c < 3; ++c) {
        const std::string key = "excited" + std::to_string(c + 2);
        if (!j.contains(key)) continue;
        const json& e = j.at(key);
        auto& ex = p.excited[static_cast<std::size_t>(c)];
        ex.amplitude = quantity(e, "amplitude", Dimension::Energy, ex.amplitude);
        ex.decay = plain(e, "decay", ex.decay);
        ex.asymptote = quantity(e, "asymptote", Dimension::Energy, ex.asymptote);
        auto& d = p.dipole[static_cast<std::size_t>(c)];
        if (e.contains("dipole")) {
            const json& dj = e.at("dipole");
            d.mu0 = plain(dj, "mu0", d.mu0);
            d.center = quantity(dj, "center", Dimension::Length, d.center);
            d.width = quantity(dj, "width", Dimension::Length, d.width);
        }
    }
    if (j.contains("r_lo")) p.r_lo = quantity(j, "r_lo", Dimension::Length);
    if (j.contains("r_hi")) p.r_hi = quantity(j, "r_hi", Dimension::Length);
    return p;
}

TableSource parse_tables(const json& j) {
    TableSource t;
    t.mass = quantity(j, "mass", Dimension::Mass);
    const std::array<std::string, 4> vkeys = {"v1", "v2", "v3", "v4"};
    for (int c = 0; c < 4; ++c) {
        t.potential[static_cast<std::size_t>(c)] =
            j.at(vkeys[static_cast<std::size_t>(c)]).get<std::string>();
    }
    const std::array<std::string, 3> mkeys = {"mu12", "mu13", "mu14"};
    for (int c = 0; c < 3; ++c) {
        t.dipole[static_cast<std::size_t>(c)] =
            j.at(mkeys[static_cast<std::size_t>(c)]).get<std::string>();
    }
    if (j.contains("asymptotes")) {
        const auto& arr = j.at("asymptotes");
        if (!arr.is_array() || arr.size() != 3) {
            throw ConfigError("'asymptotes' must list 3 entries (channels 2..4)");
        }
        for (int c = 0; c < 3; ++c) {
            t.asymptote[static_cast<std::size_t>(c)] =
                parse_asymptote(arr.at(static_cast<std::size_t>(c)).get<std::string>());
        }
    }
    return t;
}

}  // namespace

RunConfig parse_config(const json& j) {
    RunConfig cfg;

    if (!j.contains("curves")) throw ConfigError("config needs a 'curves' section");
    const json& curves = j.at("curves");
    const bool has_surrogate = curves.contains("surrogate");
    const bool has_tables = curves.contains("tables");
    if (has_surrogate == has_tables) {
        throw ConfigError("'curves' needs exactly one of 'surrogate' or 'tables'");
    }
    if (has_surrogate) cfg.surrogate = parse_surrogate(curves.at("surrogate"));
    if (has_tables) cfg.tables = parse_tables(curves.at("tables"));

    if (j.contains("grid")) {
        const json& g = j.at("grid");
        cfg.grid_r_min = quantity(g, "r_min", Dimension::Length, cfg.grid_r_min);
        cfg.grid_r_max = quantity(g, "r_max", Dimension::Length, cfg.grid_r_max);
        if (g.contains("n")) cfg.grid_n = g.at("n").get<std::size_t>();
    }

    if (j.contains("field")) {
        const json& f = j.at("field");
        const bool has_f0 = f.contains("f0");
        const bool has_intensity = f.contains("intensity");
        if (has_f0 && has_intensity) {
            throw ConfigError("'field' takes 'f0' or 'intensity', not both");
        }
        if (has_f0) {
            cfg.f0 = quantity(f, "f0", Dimension::Field);
        } else if (has_intensity) {
            cfg.f0 = units::field_from_intensity(
                quantity(f, "intensity", Dimension::Intensity));
        }
        const bool has_omega = f.contains("omega");
        const bool has_scan = f.contains("omega_scan");
        if (has_omega && has_scan) {
            throw ConfigError("'field' takes 'omega' or 'omega_scan', not both");
        }
        if (has_omega) cfg.omega = quantity(f, "omega", Dimension::Energy);
        if (has_scan) {
            const json& s = f.at("omega_scan");
            ScanSpec scan;
            scan.omega_min = quantity(s, "min", Dimension::Energy);
            scan.omega_max = quantity(s, "max", Dimension::Energy);
            scan.samples = s.at("samples").get<std::size_t>();
            if (scan.samples < 1 || !(scan.omega_max > scan.omega_min)) {
                throw ConfigError("'omega_scan' needs samples >= 1 and max > min");
            }
            cfg.scan = scan;
        }
        cfg.ramp_cycles = plain(f, "ramp_cycles", cfg.ramp_cycles);
    }

    cfg.initial_v = j.contains("initial_v") ? j.at("initial_v").get<int>() : 0;
    if (j.contains("n_states")) cfg.n_states = j.at("n_states").get<std::size_t>();

    cfg.propagation.dt = units::constants::autime_per_fs * 0.043;
    cfg.propagation.duration = units::constants::autime_per_fs * 3.5e3;
    if (j.contains("propagation")) {
        const json& p = j.at("propagation");
        cfg.propagation.dt = quantity(p, "dt", Dimension::Time, cfg.propagation.dt);
        cfg.propagation.duration =
            quantity(p, "duration", Dimension::Time, cfg.propagation.duration);
        cfg.propagation.r_flux =
            quantity(p, "flux_r", Dimension::Length, cfg.propagation.r_flux);
        if (p.contains("output_stride")) {
            cfg.propagation.output_stride = p.at("output_stride").get<std::size_t>();
        }
        if (p.contains("cap")) {
            const json& c = p.at("cap");
            cfg.propagation.cap.onset =
                quantity(c, "onset", Dimension::Length, cfg.propagation.cap.onset);
            cfg.propagation.cap.width =
                quantity(c, "width", Dimension::Length, cfg.propagation.cap.width);
            cfg.propagation.cap.eta = plain(c, "eta", cfg.propagation.cap.eta);
            if (c.contains("on_ground")) {
                cfg.propagation.cap.on_ground = c.at("on_ground").get<bool>();
            }
        }
    }
    if (cfg.propagation.cap.eta > 0.0 &&
        cfg.propagation.r_flux >= cfg.propagation.cap.onset) {
        throw ConfigError("flux probe must sit below the absorber onset");
    }

    if (j.contains("manifold")) {
        const json& m = j.at("manifold");
        if (m.contains("channels")) {
            cfg.manifold.channels = m.at("channels").get<std::vector<int>>();
        }
        if (m.contains("v_list")) {
            cfg.manifold.v_list = m.at("v_list").get<std::vector<int>>();
        }
        cfg.manifold.omega_min =
            quantity(m, "omega_min", Dimension::Energy, cfg.manifold.omega_min);
        cfg.manifold.omega_max =
            quantity(m, "omega_max", Dimension::Energy, cfg.manifold.omega_max);
        if (m.contains("samples")) {
            cfg.manifold.samples = m.at("samples").get<std::size_t>();
        }
        cfg.manifold.alignment_tolerance =
            quantity(m, "alignment_tolerance", Dimension::Energy,
                     cfg.manifold.alignment_tolerance);
    }

    if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();

    cfg.resolved = j;
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_config(j);
}

CurveSet build_curves(const RunConfig& config) {
    if (config.surrogate) {
        return surrogate_hi(*config.surrogate);
    }
    const TableSource& src = *config.tables;
    CurveSet set;
    set.mass = src.mass;
    set.asymptote = src.asymptote;
    double lo = 0.0, hi = 1e300;
    for (int c = 0; c < 4; ++c) {
        const auto table =
            load_table(src.potential[static_cast<std::size_t>(c)], TableKind::Potential);
        lo = std::max(lo, table.r.front());
        hi = std::min(hi, table.r.back());
        auto sp = std::make_shared<CubicSpline>(spline(table));
        set.v[static_cast<std::size_t>(c)] = [sp](double r) { return (*sp)(r); };
    }
    for (int c = 0; c < 3; ++c) {
        const auto table =
            load_table(src.dipole[static_cast<std::size_t>(c)], TableKind::Dipole);
        auto sp = std::make_shared<CubicSpline>(spline(table));
        set.mu[static_cast<std::size_t>(c)] = [sp](double r) { return (*sp)(r); };
    }
    set.r_lo = (src.r_lo > 0.0) ? src.r_lo : lo;
    set.r_hi = (src.r_hi > 0.0) ? src.r_hi : hi;
    return set;
}

std::string config_header(const RunConfig& config) {
    return "# config: " + config.resolved.dump();
}

}  // namespace reflectal
