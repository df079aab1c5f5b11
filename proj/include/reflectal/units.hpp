// Atomic-unit conventions and conversions. Everything internal runs in
// hartree / bohr / a.u. time; these helpers translate at the boundaries.
#pragma once

#include <string>
#include <string_view>

namespace reflectal::units {

// Fixed conversion constants (CODATA-style, compiled in).
namespace constants {
inline constexpr double hartree_per_ev = 3.674932e-2;
inline constexpr double hartree_per_wavenumber = 4.556335e-6;   // 1 cm^-1
inline constexpr double autime_per_fs = 41.34137;
inline constexpr double aumass_per_amu = 1822.888;
inline constexpr double voltperm_per_aufield = 5.142207e11;
inline constexpr double angstrom_per_bohr = 0.5291772109;
// epsilon_0 * c in SI: (W/m^2) per (V/m)^2 equals eps0*c/2 with the 1/2 kept
// explicit in the intensity relation I = eps0 c F^2 / 2.
inline constexpr double epsilon0_c = 2.654418729e-3;
// Atomic unit of intensity in W/cm^2, derived so I = eps0 c F^2 / 2 holds
// exactly for the stored field constant: (eps0 c / 2) * F_au^2 / 1e4.
inline constexpr double wpercm2_per_auintensity =
    0.5 * epsilon0_c * voltperm_per_aufield * voltperm_per_aufield * 1e-4;
}  // namespace constants

enum class Dimension { Energy, Length, Time, Mass, Field, Intensity };

enum class Unit {
    Hartree,
    ElectronVolt,
    Wavenumber,      // cm^-1
    Bohr,
    Angstrom,
    AuTime,
    Femtosecond,
    Picosecond,
    AuMass,
    Amu,
    AuField,
    VoltPerMeter,
    AuIntensity,
    WattPerCm2,
    TerawattPerCm2,
};

Dimension dimension_of(Unit u);

/// Factor turning one `u` into the atomic unit of its dimension.
double atomic_factor(Unit u);

/// Convert `value` from `from` to `to`; throws UnitError if the dimensions differ.
double convert(double value, Unit from, Unit to);

std::string_view unit_name(Unit u);

/// Parse a unit name as written in config files ("eV", "cm^-1", "fs", ...).
/// "au"/"a.u." resolves against `expected`. Throws UnitError on unknown names
/// or a dimension mismatch.
Unit parse_unit(std::string_view name, Dimension expected);

/// Peak field (a.u.) for a CW intensity (a.u.), via I = eps0 c F^2 / 2.
double field_from_intensity(double intensity_au);
double intensity_from_field(double field_au);

}  // namespace reflectal::units
