// Four-channel electronic structure: tabulated or analytic potential curves
// and transition dipoles, Floquet dressing of one excited channel against the
// ground state, and extraction of the avoided-crossing geometry.
#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "reflectal/spline.hpp"

namespace reflectal {

using Curve = std::function<double(double)>;

enum class Asymptote { I, Istar };

/// Tabulated curve samples, already converted to atomic units.
struct CurveTable {
    std::vector<double> r;       // bohr, strictly increasing
    std::vector<double> value;   // hartree (potentials) or au (dipoles)
    std::string source_units;    // as declared in the file header
};

enum class TableKind { Potential, Dipole };

/// Read a `# units: <length> <value>` annotated two-column table.
CurveTable load_table(const std::string& path, TableKind kind);

/// Natural cubic spline through a table (callable form).
CubicSpline spline(const CurveTable& table);

struct CurveSet {
    double mass = 0.0;                       // reduced mass, au
    std::array<Curve, 4> v;                  // potentials V1..V4, hartree
    std::array<Curve, 3> mu;                 // dipoles mu12, mu13, mu14, au
    std::array<Asymptote, 3> asymptote = {Asymptote::I, Asymptote::Istar,
                                          Asymptote::I};  // channels 2,3,4
    std::array<std::string, 4> label = {"ground", "excited2", "excited3", "excited4"};
    double r_lo = 0.0;                       // evaluable domain, bohr
    double r_hi = 0.0;

    const Curve& potential(int channel) const { return v.at(channel - 1); }
    const Curve& dipole(int channel) const { return mu.at(channel - 2); }
    Asymptote channel_asymptote(int channel) const { return asymptote.at(channel - 2); }
};

// Analytic surrogate family: Morse ground state, exponential repulsive
// excited states, Gaussian R-dependent dipoles.
struct MorseParams {
    double d_e;      // well depth, hartree
    double a;        // range parameter, 1/bohr
    double r_e;      // equilibrium distance, bohr
    double v_min;    // potential value at the minimum, hartree
};

struct RepulsiveParams {
    double amplitude;  // hartree
    double decay;      // 1/bohr
    double asymptote;  // hartree
};

struct GaussianDipoleParams {
    double mu0;     // peak value, au
    double center;  // bohr
    double width;   // bohr
};

struct SurrogateParams {
    double mass_amu = 0.99;
    MorseParams ground{0.12, 0.92, 3.05, -0.12};
    // Steep exponential walls keep each excited curve above the ground-state
    // inner limb, so the dressed ground state crosses each of them exactly
    // once (outer limb, opposite slopes).
    std::array<RepulsiveParams, 3> excited{{
        {51.98264749, 2.30, 0.0},  // channel 2 -> H + I
        {106.0, 2.40, 0.034544}, // channel 3 -> H + I* (spin-orbit shifted)
        {30.0, 1.90, 0.0},       // channel 4 -> H + I
    }};
    std::array<GaussianDipoleParams, 3> dipole{{
        {0.19, 3.3, 0.9},
        {0.16, 3.7, 1.0},
        {0.15, 3.45, 0.95},
    }};
    double r_lo = 0.3;
    double r_hi = 12.0;
};

/// Build the analytic curve set; validates D_e > 0 and C2 = C4 < C3.
CurveSet surrogate_hi(const SurrogateParams& params = {});

double morse(const MorseParams& p, double r);

/// Two-state Floquet-dressed block: ground diabat shifted by one photon,
/// one excited diabat, field coupling mu * F0 / 2.
struct DressedPair {
    int channel = 0;       // 2, 3 or 4
    double omega = 0.0;    // photon energy, hartree
    double f0 = 0.0;       // peak field, au
    double mass = 0.0;     // au
    Curve diabat1;         // V1 + omega
    Curve diabat2;         // V_i
    Curve coupling;        // mu_1i * F0 / 2
    double r_lo = 0.0;
    double r_hi = 0.0;

    /// Lower / upper adiabat from the pointwise 2x2 diagonalization.
    double e1(double r) const;
    double e2(double r) const;
};

DressedPair dress(const CurveSet& curves, int channel, double omega, double f0);

/// Geometry of one nonadiabatic-tunneling crossing.
struct CrossingFeatures {
    double x_t = 0.0;   // position of the lower-adiabat top, bohr
    double x_b = 0.0;   // position of the upper-adiabat bottom, bohr
    double e_t = 0.0;   // hartree
    double e_b = 0.0;   // hartree
    double gamma = 0.0;
    double alpha = 0.0;
    double r_x = 0.0;   // diabatic crossing point, bohr
    double mass = 0.0;  // au, carried along for the action integral
};

struct FeatureSearchOptions {
    double coarse_step = 5.0e-3;   // bohr
    double window = 0.9;           // initial half-width around R_x, bohr
    double position_tol = 1.0e-8;  // bohr, golden-section termination
    double min_separation = 1.0e-4;  // |x_b - x_t| below this is degenerate
};

/// Locate R_x, the adiabatic extrema and the Zhu-Nakamura geometry
/// parameters. Throws TopologyError when no opposite-slope crossing with a
/// barrier-top / well-bottom pair exists, DegenerateGeometryError for
/// near-symmetric crossings (x_b ~ x_t or gamma >= 1).
CrossingFeatures extract_features(const DressedPair& pair,
                                  const FeatureSearchOptions& opts = {});

}  // namespace reflectal
