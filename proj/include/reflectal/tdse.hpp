// Four-channel wavepacket propagation under the CW laser coupling with a
// sixth-order symplectic split scheme, complex absorbing boundary, and
// flux/norm recording.
#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "reflectal/bound.hpp"
#include "reflectal/curves.hpp"
#include "reflectal/fft.hpp"
#include "reflectal/grid.hpp"
#include "reflectal/observe.hpp"

namespace reflectal {

struct FieldSpec {
    double f0 = 0.0;     // peak field, au
    double omega = 0.0;  // photon energy, hartree
    double ramp = 0.0;   // envelope ramp duration, au time
};

/// F(t) = F0 cos(omega t) Theta(t), Theta a sin^2 ramp saturating at t = ramp.
/// Ramps shorter than 5 optical cycles draw a warning on stderr but work.
std::function<double(double)> build_field(const FieldSpec& spec);
bool ramp_is_short(const FieldSpec& spec);

struct CapSpec {
    double onset = 9.0;   // bohr
    double width = 1.0;   // bohr
    double eta = 0.0;     // au; 0 disables the absorber
    bool on_ground = false;
};

struct PropagationConfig {
    double dt = 0.0;        // au time
    double duration = 0.0;  // au time
    CapSpec cap;
    double r_flux = 6.0;    // probe position, bohr
    std::size_t output_stride = 50;
};

struct WavepacketState {
    double t = 0.0;
    std::array<std::vector<std::complex<double>>, 4> phi;
};

struct PropagationResult {
    std::vector<double> t;                     // au
    std::vector<std::array<double, 4>> norms;  // per channel
    FluxRecord flux;
    WavepacketState final_state;
};

class Propagator {
public:
    Propagator(const CurveSet& curves, const RadialGrid& grid, const FieldSpec& field,
               const PropagationConfig& config);

    const RadialGrid& grid() const { return grid_; }

    WavepacketState initial_state(const VibrationalState& chi) const;

    /// One composite sixth-order step (8 kinetic, 7 potential factors) plus
    /// one dt of absorbing potential.
    void step(WavepacketState& state);

    /// One dt worth of the quadratic negative-imaginary absorber.
    void apply_cap(WavepacketState& state) const;

    double channel_norm(const WavepacketState& state, int channel) const;
    double total_norm(const WavepacketState& state) const;

    /// Run t: 0 -> duration, recording norms and fluxes every output stride.
    /// Throws InstabilityError on norm blow-up.
    PropagationResult propagate(const VibrationalState& initial);

private:
    std::array<bool, 4> effective_channels(const WavepacketState& state) const;
    void kinetic_factor(WavepacketState& state, int stage,
                        const std::array<bool, 4>& on);
    void potential_factor(WavepacketState& state, int stage, double field_value,
                          const std::array<bool, 4>& on);

    RadialGrid grid_;
    double mass_;
    FieldSpec field_spec_;
    std::function<double(double)> field_;
    PropagationConfig config_;
    Fft fft_;

    std::array<std::vector<double>, 4> v_;   // potentials on the grid
    std::array<std::vector<double>, 3> mu_;  // dipoles on the grid
    std::array<bool, 4> active_{};
    int n_active_ = 0;
    int lone_excited_ = -1;  // set when exactly one excited channel couples

    std::array<double, 8> c_coeff_{};
    std::array<double, 8> c_cum_{};
    std::array<double, 7> d_coeff_{};
    std::array<int, 8> kin_table_index_{};
    std::vector<std::vector<std::complex<double>>> kin_phase_;  // per distinct c

    std::vector<double> cap_factor_;  // per point, one dt
    std::size_t cap_start_ = 0;
};

}  // namespace reflectal
