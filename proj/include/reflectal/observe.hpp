// Probability flux at an asymptotic probe, time-integrated channel fluxes,
// and branching ratios.
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace reflectal {

/// (1/m) Im{phi* dphi/dR} at grid index ic, five-point derivative.
/// Throws GridError when ic is closer than 2 points to either boundary.
double instantaneous_flux(const std::vector<std::complex<double>>& phi,
                          std::size_t ic, double mass, double dr);

/// Time series of instantaneous and time-integrated fluxes for the three
/// excited channels (index 0 -> channel 2).
struct FluxRecord {
    double r_c = 0.0;  // probe position, bohr
    std::vector<double> t;
    std::array<std::vector<double>, 3> j_inst;
    std::array<std::vector<double>, 3> j_int;

    std::array<double, 3> final_fluxes() const {
        return {j_int[0].empty() ? 0.0 : j_int[0].back(),
                j_int[1].empty() ? 0.0 : j_int[1].back(),
                j_int[2].empty() ? 0.0 : j_int[2].back()};
    }
};

/// Append one output-stride sample, extending the trapezoidal time integral.
void accumulate_flux(FluxRecord& record, double t, const std::array<double, 3>& inst);

struct Branching {
    double p_i = 0.0;      // J2 + J4
    double p_istar = 0.0;  // J3
    double ratio = 0.0;    // P_I* / P_I
    bool ratio_infinite = false;
};

Branching branching(const FluxRecord& record);

}  // namespace reflectal
