#include "reflectal/observe.hpp"

#include <cmath>
#include <limits>

#include "reflectal/errors.hpp"

namespace reflectal {

double instantaneous_flux(const std::vector<std::complex<double>>& phi,
                          std::size_t ic, double mass, double dr) {
    if (ic < 2 || ic + 2 >= phi.size()) {
        throw GridError("flux probe too close to the grid boundary");
    }
    const std::complex<double> dphi =
        (-phi[ic + 2] + 8.0 * phi[ic + 1] - 8.0 * phi[ic - 1] + phi[ic - 2]) /
        (12.0 * dr);
    return std::imag(std::conj(phi[ic]) * dphi) / mass;
}

void accumulate_flux(FluxRecord& record, double t, const std::array<double, 3>& inst) {
    for (int c = 0; c < 3; ++c) {
        const auto ci = static_cast<std::size_t>(c);
        double integral = record.j_int[ci].empty() ? 0.0 : record.j_int[ci].back();
        if (!record.t.empty()) {
            const double dt = t - record.t.back();
            integral += 0.5 * (record.j_inst[ci].back() + inst[ci]) * dt;
        }
        record.j_inst[ci].push_back(inst[ci]);
        record.j_int[ci].push_back(integral);
    }
    record.t.push_back(t);
}

Branching branching(const FluxRecord& record) {
    const auto j = record.final_fluxes();
    Branching b;
    b.p_i = j[0] + j[2];
    b.p_istar = j[1];
    if (b.p_i < 1e-12) {
        b.ratio_infinite = true;
        b.ratio = std::numeric_limits<double>::infinity();
    } else {
        b.ratio = b.p_istar / b.p_i;
    }
    return b;
}

}  // namespace reflectal
