#include "reflectal/tdse.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

#include "reflectal/errors.hpp"

namespace reflectal {

namespace {
constexpr double kPi = std::numbers::pi;

// Yoshida sixth-order composition (solution A) of the second-order split,
// with adjacent kinetic half-factors merged into c1..c8 / d1..d7.
constexpr double kW1 = -1.17767998417887;
constexpr double kW2 = 0.235573213359357;
constexpr double kW3 = 0.784513610477560;
constexpr double kW0 = 1.0 - 2.0 * (kW1 + kW2 + kW3);

struct Rotation {
    int p, q;
    double c, s;
};
}  // namespace

bool ramp_is_short(const FieldSpec& spec) {
    if (!(spec.omega > 0.0)) return false;
    return spec.ramp < 5.0 * (2.0 * kPi / spec.omega);
}

std::function<double(double)> build_field(const FieldSpec& spec) {
    if (ramp_is_short(spec)) {
        std::cerr << "warning: field envelope ramp " << spec.ramp
                  << " au is shorter than 5 optical cycles\n";
    }
    const double f0 = spec.f0;
    const double omega = spec.omega;
    const double ramp = spec.ramp;
    return [f0, omega, ramp](double t) {
        if (t <= 0.0) return 0.0;
        double envelope = 1.0;
        if (t < ramp) {
            const double s = std::sin(0.5 * kPi * t / ramp);
            envelope = s * s;
        }
        return f0 * std::cos(omega * t) * envelope;
    };
}

Propagator::Propagator(const CurveSet& curves, const RadialGrid& grid,
                       const FieldSpec& field, const PropagationConfig& config)
    : grid_(grid),
      mass_(curves.mass),
      field_spec_(field),
      field_(build_field(field)),
      config_(config),
      fft_(grid.size()) {
    if (!(config_.dt > 0.0)) throw ConfigError("propagation needs dt > 0");
    if (config_.output_stride == 0) throw ConfigError("output stride must be >= 1");
    if (config_.cap.eta > 0.0 &&
        config_.cap.onset + config_.cap.width > grid_.r_max() + 1e-12) {
        throw ConfigError("absorber must end at or before r_max");
    }

    const std::size_t n = grid_.size();
    for (int c = 0; c < 4; ++c) {
        auto& vc = v_[static_cast<std::size_t>(c)];
        vc.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            vc[i] = curves.v[static_cast<std::size_t>(c)](grid_.point(i));
        }
    }
    active_[0] = true;
    for (int c = 0; c < 3; ++c) {
        auto& mc = mu_[static_cast<std::size_t>(c)];
        mc.resize(n);
        double peak = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            mc[i] = curves.mu[static_cast<std::size_t>(c)](grid_.point(i));
            peak = std::max(peak, std::abs(mc[i]));
        }
        active_[static_cast<std::size_t>(c) + 1] = peak > 0.0;
    }
    n_active_ = 0;
    for (bool a : active_) n_active_ += a ? 1 : 0;
    if (n_active_ == 2) {
        for (int c = 1; c < 4; ++c) {
            if (active_[static_cast<std::size_t>(c)]) lone_excited_ = c;
        }
    }

    c_coeff_ = {0.5 * kW3,        0.5 * (kW3 + kW2), 0.5 * (kW2 + kW1),
                0.5 * (kW1 + kW0), 0.5 * (kW1 + kW0), 0.5 * (kW2 + kW1),
                0.5 * (kW3 + kW2), 0.5 * kW3};
    d_coeff_ = {kW3, kW2, kW1, kW0, kW1, kW2, kW3};
    double cum = 0.0;
    for (int s = 0; s < 8; ++s) {
        cum += c_coeff_[static_cast<std::size_t>(s)];
        c_cum_[static_cast<std::size_t>(s)] = cum;
    }
    kin_table_index_ = {0, 1, 2, 3, 3, 2, 1, 0};

    const auto k = grid_.wavenumbers();
    kin_phase_.resize(4);
    const double scale = 1.0 / static_cast<double>(n);
    for (int j = 0; j < 4; ++j) {
        auto& table = kin_phase_[static_cast<std::size_t>(j)];
        table.resize(n);
        const double c = c_coeff_[static_cast<std::size_t>(j)];
        for (std::size_t l = 0; l < n; ++l) {
            const double phase = -c * config_.dt * k[l] * k[l] / (2.0 * mass_);
            table[l] = std::polar(scale, phase);
        }
    }

    if (config_.cap.eta > 0.0) {
        cap_start_ = grid_.index_near(config_.cap.onset);
        if (grid_.point(cap_start_) < config_.cap.onset) ++cap_start_;
        cap_factor_.resize(n, 1.0);
        for (std::size_t i = cap_start_; i < n; ++i) {
            const double u = (grid_.point(i) - config_.cap.onset) / config_.cap.width;
            cap_factor_[i] = std::exp(-config_.cap.eta * u * u * config_.dt);
        }
    }
}

WavepacketState Propagator::initial_state(const VibrationalState& chi) const {
    const std::size_t n = grid_.size();
    if (chi.chi.size() != n) throw ConfigError("initial state grid mismatch");
    WavepacketState state;
    state.t = 0.0;
    for (auto& p : state.phi) p.assign(n, {0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) state.phi[0][i] = chi.chi[i];
    return state;
}

double Propagator::channel_norm(const WavepacketState& state, int channel) const {
    const auto& p = state.phi.at(static_cast<std::size_t>(channel - 1));
    double sum = 0.0;
    for (const auto& z : p) sum += std::norm(z);
    return sum * grid_.dr();
}

double Propagator::total_norm(const WavepacketState& state) const {
    double sum = 0.0;
    for (int c = 1; c <= 4; ++c) sum += channel_norm(state, c);
    return sum;
}

std::array<bool, 4> Propagator::effective_channels(const WavepacketState& state) const {
    std::array<bool, 4> on{};
    for (int c = 0; c < 4; ++c) {
        const auto ci = static_cast<std::size_t>(c);
        if (active_[ci]) {
            on[ci] = true;
            continue;
        }
        for (const auto& z : state.phi[ci]) {
            if (z != std::complex<double>(0.0, 0.0)) {
                on[ci] = true;
                break;
            }
        }
    }
    return on;
}

void Propagator::kinetic_factor(WavepacketState& state, int stage,
                                const std::array<bool, 4>& on) {
    const auto& table = kin_phase_[static_cast<std::size_t>(
        kin_table_index_[static_cast<std::size_t>(stage)])];
    for (int c = 0; c < 4; ++c) {
        if (!on[static_cast<std::size_t>(c)]) continue;
        auto* data = state.phi[static_cast<std::size_t>(c)].data();
        fft_.forward(data);
        for (std::size_t l = 0; l < table.size(); ++l) data[l] *= table[l];
        fft_.backward(data);
    }
}

void Propagator::potential_factor(WavepacketState& state, int stage, double field_value,
                                  const std::array<bool, 4>& on) {
    // Phase scale for e^{-i d_k V dt}.
    const double ph = -d_coeff_[static_cast<std::size_t>(stage)] * config_.dt;
    const std::size_t n = grid_.size();

    if (field_value == 0.0) {
        for (int c = 0; c < 4; ++c) {
            if (!on[static_cast<std::size_t>(c)]) continue;
            auto& p = state.phi[static_cast<std::size_t>(c)];
            const auto& vc = v_[static_cast<std::size_t>(c)];
            for (std::size_t i = 0; i < n; ++i) p[i] *= std::polar(1.0, ph * vc[i]);
        }
        return;
    }

    if (lone_excited_ >= 0) {
        // Single coupled excited channel: closed-form 2x2 rotation.
        const auto ex = static_cast<std::size_t>(lone_excited_);
        auto& pg = state.phi[0];
        auto& pe = state.phi[ex];
        const auto& vg = v_[0];
        const auto& ve = v_[ex];
        const auto& mu = mu_[ex - 1];
        for (std::size_t i = 0; i < n; ++i) {
            const double h12 = -mu[i] * field_value;
            const double mean = 0.5 * (vg[i] + ve[i]);
            const double half = 0.5 * (vg[i] - ve[i]);
            const double r = std::hypot(half, h12);
            if (r == 0.0) {
                const auto rot = std::polar(1.0, ph * mean);
                pg[i] *= rot;
                pe[i] *= rot;
                continue;
            }
            const double angle = 0.5 * std::atan2(2.0 * h12, vg[i] - ve[i]);
            const double cth = std::cos(angle);
            const double sth = std::sin(angle);
            const auto wp = cth * pg[i] + sth * pe[i];
            const auto wm = -sth * pg[i] + cth * pe[i];
            const auto ep = wp * std::polar(1.0, ph * (mean + r));
            const auto em = wm * std::polar(1.0, ph * (mean - r));
            pg[i] = cth * ep - sth * em;
            pe[i] = sth * ep + cth * em;
        }
        // Uncoupled channels still collect their diagonal phase.
        for (int c = 1; c < 4; ++c) {
            const auto ci = static_cast<std::size_t>(c);
            if (c == lone_excited_ || !on[ci]) continue;
            auto& p = state.phi[ci];
            const auto& vc = v_[ci];
            for (std::size_t i = 0; i < n; ++i) p[i] *= std::polar(1.0, ph * vc[i]);
        }
        return;
    }

    // General case: pointwise 4x4 symmetric Jacobi diagonalization, phases on
    // the eigenvalues, rotations replayed on the amplitudes.
    for (std::size_t i = 0; i < n; ++i) {
        double a[4][4] = {};
        for (int c = 0; c < 4; ++c) a[c][c] = v_[static_cast<std::size_t>(c)][i];
        for (int c = 0; c < 3; ++c) {
            a[0][c + 1] = a[c + 1][0] = -mu_[static_cast<std::size_t>(c)][i] * field_value;
        }

        Rotation rots[96];
        int n_rot = 0;
        for (int sweep = 0; sweep < 12; ++sweep) {
            double off = 0.0;
            for (int p = 0; p < 4; ++p)
                for (int q = p + 1; q < 4; ++q) off += a[p][q] * a[p][q];
            if (off < 1e-30) break;
            for (int p = 0; p < 4; ++p) {
                for (int q = p + 1; q < 4; ++q) {
                    const double apq = a[p][q];
                    if (std::abs(apq) < 1e-300) continue;
                    const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    a[p][p] -= t * apq;
                    a[q][q] += t * apq;
                    a[p][q] = a[q][p] = 0.0;
                    for (int r = 0; r < 4; ++r) {
                        if (r == p || r == q) continue;
                        const double arp = a[r][p];
                        const double arq = a[r][q];
                        a[r][p] = a[p][r] = c * arp - s * arq;
                        a[r][q] = a[q][r] = s * arp + c * arq;
                    }
                    rots[n_rot++] = {p, q, c, s};
                }
            }
        }

        std::complex<double> z[4];
        for (int c = 0; c < 4; ++c) z[c] = state.phi[static_cast<std::size_t>(c)][i];
        // w = U^T z: transposed rotations in application order.
        for (int r = 0; r < n_rot; ++r) {
            const auto& g = rots[r];
            const auto zp = z[g.p];
            const auto zq = z[g.q];
            z[g.p] = g.c * zp - g.s * zq;
            z[g.q] = g.s * zp + g.c * zq;
        }
        for (int c = 0; c < 4; ++c) z[c] *= std::polar(1.0, ph * a[c][c]);
        // z' = U w: rotations replayed in reverse.
        for (int r = n_rot - 1; r >= 0; --r) {
            const auto& g = rots[r];
            const auto zp = z[g.p];
            const auto zq = z[g.q];
            z[g.p] = g.c * zp + g.s * zq;
            z[g.q] = -g.s * zp + g.c * zq;
        }
        for (int c = 0; c < 4; ++c) state.phi[static_cast<std::size_t>(c)][i] = z[c];
    }
}

void Propagator::apply_cap(WavepacketState& state) const {
    if (cap_factor_.empty()) return;
    const std::size_t n = grid_.size();
    for (int c = 0; c < 4; ++c) {
        if (c == 0 && !config_.cap.on_ground) continue;
        auto& p = state.phi[static_cast<std::size_t>(c)];
        for (std::size_t i = cap_start_; i < n; ++i) p[i] *= cap_factor_[i];
    }
}

void Propagator::step(WavepacketState& state) {
    const auto on = effective_channels(state);
    kinetic_factor(state, 0, on);
    for (int s = 0; s < 7; ++s) {
        const double tau = state.t + c_cum_[static_cast<std::size_t>(s)] * config_.dt;
        potential_factor(state, s, field_(tau), on);
        kinetic_factor(state, s + 1, on);
    }
    state.t += config_.dt;
    apply_cap(state);
}

PropagationResult Propagator::propagate(const VibrationalState& initial) {
    WavepacketState state = initial_state(initial);
    const double n0 = total_norm(state);
    if (std::abs(n0 - 1.0) > 1e-6) {
        throw ConfigError("initial state is not normalized");
    }

    const auto total_steps =
        static_cast<long long>(std::llround(config_.duration / config_.dt));
    const std::size_t ic = grid_.index_near(config_.r_flux);

    PropagationResult result;
    result.flux.r_c = grid_.point(ic);

    auto record = [&](long long step_index) {
        const double t = static_cast<double>(step_index) * config_.dt;
        std::array<double, 4> norms{};
        for (int c = 1; c <= 4; ++c) {
            norms[static_cast<std::size_t>(c - 1)] = channel_norm(state, c);
        }
        std::array<double, 3> inst{};
        for (int c = 2; c <= 4; ++c) {
            inst[static_cast<std::size_t>(c - 2)] =
                instantaneous_flux(state.phi[static_cast<std::size_t>(c - 1)], ic,
                                   mass_, grid_.dr());
        }
        result.t.push_back(t);
        result.norms.push_back(norms);
        accumulate_flux(result.flux, t, inst);

        const double total = norms[0] + norms[1] + norms[2] + norms[3];
        if (!(total <= 1.0 + 1e-6)) {  // also trips on NaN
            throw InstabilityError("norm blow-up (" + std::to_string(total) +
                                   ") at t = " + std::to_string(t) +
                                   " au; reduce dt = " + std::to_string(config_.dt));
        }
    };

    record(0);
    for (long long s = 1; s <= total_steps; ++s) {
        state.t = static_cast<double>(s - 1) * config_.dt;  // keep the clock exact
        step(state);
        if (s % static_cast<long long>(config_.output_stride) == 0 || s == total_steps) {
            record(s);
        }
    }
    result.final_state = std::move(state);
    return result;
}

}  // namespace reflectal
