// Semiclassical engine for nonadiabatic-tunneling crossings: one-passage
// transmission probability, complete-reflection manifolds Psi_v(omega), and
// the search for laser frequencies that block both H+I channels at once.
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "reflectal/curves.hpp"

namespace reflectal::zn {

/// Principal-branch arg Gamma(i y) for y > 0 (Lanczos evaluation).
double arg_gamma_imag(double y);

/// Classical action (radians) between the turning points of `e2` at `energy`:
/// integral of sqrt(2 m (E - E2(x))) dx, evaluated by Gauss-Legendre after a
/// sine substitution that removes the square-root endpoint zeros.
/// `x_well` must lie in the classically allowed region (the well bottom);
/// throws ZnDomainError when E <= E2(x_well) or a turning point cannot be
/// bracketed inside [r_lo, r_hi].
double action_sigma(const std::function<double(double)>& e2, double energy,
                    double mass, double x_well, double r_lo, double r_hi);

struct ZnParameters {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double f = 0.0;
    double phi_s = 0.0;   // radians
    double sigma = 0.0;   // radians
    double g = 0.0;
    double p = 0.0;       // one-passage hop probability
    double psi = 0.0;     // radians
    double energy = 0.0;  // hartree
};

/// Populate every Zhu-Nakamura quantity at total energy E on the dressed
/// pair's absolute scale. Requires E above the upper-adiabat bottom
/// (beta > 1); throws ZnDomainError otherwise.
ZnParameters zn_assemble(const DressedPair& pair, const CrossingFeatures& features,
                         double energy);

/// Overall transmission probability P = 4 cos^2 Psi / (4 cos^2 Psi + p^2/(1-p)).
double transmission(const ZnParameters& params);
double transmission(double psi, double p);

/// Same formula with the phase given in units of pi, evaluated through an
/// exact pi-multiple reduction: representable half-integers give cos = 0
/// exactly, so complete reflection is exact rather than accurate to the
/// rounding of pi.
double transmission_pi_units(double psi_over_pi, double p);

/// cos(pi x) with exact reduction of the integer and half-integer part.
double cos_pi(double x);

struct ManifoldRoot {
    double omega = 0.0;         // hartree
    int n = 0;                  // Psi = (n + 1/2) pi
    double transmission = 0.0;  // P at the refined root (forced ~0 by Eq. form)
};

struct ManifoldCurve {
    int v = 0;
    int channel = 0;
    std::vector<double> omega;         // hartree, ascending
    std::vector<double> psi_over_pi;   // only meaningful where valid
    std::vector<double> transmission;  // P(omega)
    std::vector<double> hop_p;         // p(omega), kept for interpolation
    std::vector<char> valid;           // 0 marks a domain-error gap
    std::vector<ManifoldRoot> roots;
    std::vector<std::pair<double, double>> gaps;  // sampled gap intervals
};

/// Sample Psi_v(omega) = Psi(E_v + omega) for one excited channel over
/// [omega_range.first, omega_range.second] and locate the complete-reflection
/// roots. Domain errors at individual samples become gap intervals; if no
/// sample is valid, throws WindowError.
ManifoldCurve manifold(const CurveSet& curves, int channel, int v, double e_v,
                       std::pair<double, double> omega_range, std::size_t nsamples,
                       double f0);

struct AlignmentCandidate {
    double omega = 0.0;    // midpoint of the paired roots, hartree
    double quality = 0.0;  // predicted P_2 + P_4 at omega
    int n_first = 0;
    int n_second = 0;
};

/// Frequencies where a root of each H+I manifold falls within tolerance of
/// the other, sorted by predicted residual transmission (best first).
std::vector<AlignmentCandidate> find_control_frequency(const ManifoldCurve& first,
                                                       const ManifoldCurve& second,
                                                       double tolerance_omega);

/// Interpolated Psi/pi and p at an arbitrary frequency inside the sampled
/// window; returns false when omega falls in a gap.
bool interpolate_manifold(const ManifoldCurve& curve, double omega,
                          double& psi_over_pi, double& hop_p);

}  // namespace reflectal::zn
