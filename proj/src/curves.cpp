#include "reflectal/curves.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "optimize.hpp"
#include "reflectal/errors.hpp"
#include "reflectal/units.hpp"

namespace reflectal {

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

}  // namespace

CurveTable load_table(const std::string& path, TableKind kind) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open curve table '" + path + "'");

    CurveTable table;
    bool have_units = false;
    double length_factor = 1.0;
    double value_factor = 1.0;

    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.rfind("# units:", 0) == 0) {
            std::istringstream hdr(line.substr(8));
            std::string length_name, value_name;
            if (!(hdr >> length_name >> value_name)) {
                throw ParseError("malformed '# units:' directive", lineno);
            }
            using namespace units;
            length_factor = atomic_factor(parse_unit(length_name, Dimension::Length));
            if (kind == TableKind::Potential) {
                value_factor = atomic_factor(parse_unit(value_name, Dimension::Energy));
            } else {
                if (value_name != "au" && value_name != "a.u.") {
                    throw ParseError("dipole tables must be in au", lineno);
                }
                value_factor = 1.0;
            }
            table.source_units = length_name + " " + value_name;
            have_units = true;
            continue;
        }
        if (is_comment_or_blank(line)) continue;
        if (!have_units) {
            throw ParseError("data before the required '# units:' directive", lineno);
        }
        std::istringstream row(line);
        double r = 0.0, v = 0.0;
        if (!(row >> r >> v)) {
            throw ParseError("expected 'R value' row", lineno);
        }
        std::string trailing;
        if (row >> trailing) {
            throw ParseError("unexpected trailing column", lineno);
        }
        r *= length_factor;
        v *= value_factor;
        if (!table.r.empty() && !(r > table.r.back())) {
            throw ParseError(r == table.r.back() ? "duplicated R sample"
                                                 : "R samples not in ascending order",
                             lineno);
        }
        table.r.push_back(r);
        table.value.push_back(v);
    }
    if (!have_units) throw ParseError("missing '# units:' directive in '" + path + "'");
    if (table.r.size() < 4) {
        throw ParseError("curve table '" + path + "' needs at least 4 rows");
    }
    return table;
}

CubicSpline spline(const CurveTable& table) {
    return CubicSpline(table.r, table.value);
}

double morse(const MorseParams& p, double r) {
    const double u = 1.0 - std::exp(-p.a * (r - p.r_e));
    return p.d_e * u * u + p.v_min;
}

CurveSet surrogate_hi(const SurrogateParams& params) {
    if (!(params.ground.d_e > 0.0)) {
        throw ConfigError("surrogate ground state needs D_e > 0");
    }
    const double c2 = params.excited[0].asymptote;
    const double c3 = params.excited[1].asymptote;
    const double c4 = params.excited[2].asymptote;
    if (c2 != c4 || !(c2 < c3)) {
        throw ConfigError("surrogate asymptotes must satisfy C2 = C4 < C3");
    }

    CurveSet set;
    set.mass = params.mass_amu * units::constants::aumass_per_amu;
    set.r_lo = params.r_lo;
    set.r_hi = params.r_hi;
    set.label = {"X (bound)", "A (H+I)", "B (H+I*)", "C (H+I)"};
    set.asymptote = {Asymptote::I, Asymptote::Istar, Asymptote::I};

    const MorseParams g = params.ground;
    set.v[0] = [g](double r) { return morse(g, r); };
    for (int i = 0; i < 3; ++i) {
        const RepulsiveParams e = params.excited[static_cast<std::size_t>(i)];
        set.v[static_cast<std::size_t>(i) + 1] = [e](double r) {
            return e.amplitude * std::exp(-e.decay * r) + e.asymptote;
        };
        const GaussianDipoleParams d = params.dipole[static_cast<std::size_t>(i)];
        set.mu[static_cast<std::size_t>(i)] = [d](double r) {
            const double u = (r - d.center) / d.width;
            return d.mu0 * std::exp(-u * u);
        };
    }
    return set;
}

double DressedPair::e1(double r) const {
    const double h11 = diabat1(r);
    const double h22 = diabat2(r);
    const double h12 = coupling(r);
    const double mean = 0.5 * (h11 + h22);
    const double half = 0.5 * (h11 - h22);
    return mean - std::sqrt(half * half + h12 * h12);
}

double DressedPair::e2(double r) const {
    const double h11 = diabat1(r);
    const double h22 = diabat2(r);
    const double h12 = coupling(r);
    const double mean = 0.5 * (h11 + h22);
    const double half = 0.5 * (h11 - h22);
    return mean + std::sqrt(half * half + h12 * h12);
}

DressedPair dress(const CurveSet& curves, int channel, double omega, double f0) {
    if (channel < 2 || channel > 4) {
        throw Error("dress: channel must be 2, 3 or 4");
    }
    if (!(omega > 0.0)) throw Error("dress: photon energy must be positive");
    if (f0 < 0.0) throw Error("dress: field amplitude must be >= 0");

    DressedPair pair;
    pair.channel = channel;
    pair.omega = omega;
    pair.f0 = f0;
    pair.mass = curves.mass;
    pair.r_lo = curves.r_lo;
    pair.r_hi = curves.r_hi;
    const Curve v1 = curves.v[0];
    pair.diabat1 = [v1, omega](double r) { return v1(r) + omega; };
    pair.diabat2 = curves.potential(channel);
    const Curve mu = curves.dipole(channel);
    pair.coupling = [mu, f0](double r) { return 0.5 * mu(r) * f0; };
    return pair;
}

CrossingFeatures extract_features(const DressedPair& pair,
                                  const FeatureSearchOptions& opts) {
    const double lo = pair.r_lo;
    const double hi = pair.r_hi;
    const double step = opts.coarse_step;

    // Diabatic crossing: rightmost sign change of d1 - d2 going from below to
    // above (the opposite-slope, nonadiabatic-tunneling branch).
    auto diff = [&](double r) { return pair.diabat1(r) - pair.diabat2(r); };
    double rx = 0.0;
    bool found = false;
    double prev_r = lo;
    double prev_d = diff(prev_r);
    for (double r = lo + step; r <= hi; r += step) {
        const double d = diff(r);
        if (prev_d < 0.0 && d >= 0.0) {
            rx = detail::bisect(diff, prev_r, r, prev_d, d, 1e-12);
            found = true;  // keep scanning; the rightmost bracket wins
        }
        prev_r = r;
        prev_d = d;
    }
    if (!found) {
        throw TopologyError("no upward diabatic crossing in the search domain");
    }

    // The barrier top / well bottom are *local* extrema next to R_x; a
    // window-wide search would latch onto the inner repulsive limb. Walk
    // downhill (for the objective) from R_x until the value turns back up,
    // then refine the three-point bracket.
    auto e1 = [&](double r) { return pair.e1(r); };
    auto e2 = [&](double r) { return pair.e2(r); };

    auto locate_extremum = [&](auto&& f, bool minimize) -> double {
        auto objective = [&](double r) { return minimize ? f(r) : -f(r); };
        const auto max_steps = static_cast<long>(opts.window * 8.0 / step);

        double center = rx;
        double f_center = objective(center);
        const double f_left = objective(center - step);
        const double f_right = objective(center + step);
        if (f_left < f_center || f_right < f_center) {
            // march toward decreasing objective
            const double dir = (f_left < f_right) ? -1.0 : 1.0;
            bool bracketed = false;
            for (long k = 1; k <= max_steps; ++k) {
                const double next = center + dir * step;
                if (next <= lo || next >= hi) break;
                const double f_next = objective(next);
                if (f_next > f_center) {
                    bracketed = true;
                    break;
                }
                center = next;
                f_center = f_next;
            }
            if (!bracketed) {
                throw TopologyError("no interior adiabatic extremum near the crossing");
            }
            return detail::golden_min(objective, center - step, center + step,
                                      opts.position_tol);
        }
        // already bracketed within one step of R_x
        return detail::golden_min(objective, center - step, center + step,
                                  opts.position_tol);
    };

    CrossingFeatures feats;
    feats.r_x = rx;
    feats.mass = pair.mass;
    feats.x_b = locate_extremum(e2, /*minimize=*/true);
    feats.x_t = locate_extremum(e1, /*minimize=*/false);
    feats.e_b = e2(feats.x_b);
    feats.e_t = e1(feats.x_t);

    if (!(feats.e_b > feats.e_t)) {
        throw TopologyError("upper-adiabat bottom not above lower-adiabat top");
    }
    if (std::abs(feats.x_b - feats.x_t) < opts.min_separation) {
        throw DegenerateGeometryError(
            "crossing too symmetric: |x_b - x_t| < " + std::to_string(opts.min_separation));
    }

    const double x_mid = 0.5 * (feats.x_b + feats.x_t);
    if (x_mid <= lo || x_mid >= hi) {
        throw Error("adiabatic-gap midpoint outside the curve domain");
    }
    const double gap = e2(x_mid) - e1(x_mid);
    feats.gamma = (feats.e_b - feats.e_t) / gap;
    const double dx = feats.x_b - feats.x_t;
    feats.alpha = (1.0 - feats.gamma * feats.gamma) /
                  (pair.mass * dx * dx * (feats.e_b - feats.e_t));
    if (!(feats.alpha > 0.0)) {
        throw DegenerateGeometryError("gamma >= 1 leaves alpha <= 0");
    }
    return feats;
}

}  // namespace reflectal
