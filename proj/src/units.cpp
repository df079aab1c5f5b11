#include "reflectal/units.hpp"

#include <cmath>

#include "reflectal/errors.hpp"

namespace reflectal::units {

namespace {
constexpr double kAuIntensityW = constants::wpercm2_per_auintensity;
}

Dimension dimension_of(Unit u) {
    switch (u) {
        case Unit::Hartree:
        case Unit::ElectronVolt:
        case Unit::Wavenumber:
            return Dimension::Energy;
        case Unit::Bohr:
        case Unit::Angstrom:
            return Dimension::Length;
        case Unit::AuTime:
        case Unit::Femtosecond:
        case Unit::Picosecond:
            return Dimension::Time;
        case Unit::AuMass:
        case Unit::Amu:
            return Dimension::Mass;
        case Unit::AuField:
        case Unit::VoltPerMeter:
            return Dimension::Field;
        case Unit::AuIntensity:
        case Unit::WattPerCm2:
        case Unit::TerawattPerCm2:
            return Dimension::Intensity;
    }
    throw UnitError("unknown unit");
}

double atomic_factor(Unit u) {
    using namespace constants;
    switch (u) {
        case Unit::Hartree: return 1.0;
        case Unit::ElectronVolt: return hartree_per_ev;
        case Unit::Wavenumber: return hartree_per_wavenumber;
        case Unit::Bohr: return 1.0;
        case Unit::Angstrom: return 1.0 / angstrom_per_bohr;
        case Unit::AuTime: return 1.0;
        case Unit::Femtosecond: return autime_per_fs;
        case Unit::Picosecond: return 1e3 * autime_per_fs;
        case Unit::AuMass: return 1.0;
        case Unit::Amu: return aumass_per_amu;
        case Unit::AuField: return 1.0;
        case Unit::VoltPerMeter: return 1.0 / voltperm_per_aufield;
        case Unit::AuIntensity: return 1.0;
        case Unit::WattPerCm2: return 1.0 / kAuIntensityW;
        case Unit::TerawattPerCm2: return 1e12 / kAuIntensityW;
    }
    throw UnitError("unknown unit");
}

double convert(double value, Unit from, Unit to) {
    if (dimension_of(from) != dimension_of(to)) {
        throw UnitError("cannot convert " + std::string(unit_name(from)) + " to " +
                        std::string(unit_name(to)) + ": different dimensions");
    }
    return value * atomic_factor(from) / atomic_factor(to);
}

std::string_view unit_name(Unit u) {
    switch (u) {
        case Unit::Hartree: return "hartree";
        case Unit::ElectronVolt: return "eV";
        case Unit::Wavenumber: return "cm^-1";
        case Unit::Bohr: return "bohr";
        case Unit::Angstrom: return "angstrom";
        case Unit::AuTime: return "au";
        case Unit::Femtosecond: return "fs";
        case Unit::Picosecond: return "ps";
        case Unit::AuMass: return "au";
        case Unit::Amu: return "amu";
        case Unit::AuField: return "au";
        case Unit::VoltPerMeter: return "V/m";
        case Unit::AuIntensity: return "au";
        case Unit::WattPerCm2: return "W/cm^2";
        case Unit::TerawattPerCm2: return "TW/cm^2";
    }
    return "?";
}

Unit parse_unit(std::string_view name, Dimension expected) {
    auto match = [&](std::string_view s) { return name == s; };
    if (match("au") || match("a.u.")) {
        switch (expected) {
            case Dimension::Energy: return Unit::Hartree;
            case Dimension::Length: return Unit::Bohr;
            case Dimension::Time: return Unit::AuTime;
            case Dimension::Mass: return Unit::AuMass;
            case Dimension::Field: return Unit::AuField;
            case Dimension::Intensity: return Unit::AuIntensity;
        }
    }
    Unit u;
    if (match("hartree") || match("Eh")) u = Unit::Hartree;
    else if (match("eV") || match("ev")) u = Unit::ElectronVolt;
    else if (match("cm^-1") || match("cm-1") || match("1/cm")) u = Unit::Wavenumber;
    else if (match("bohr")) u = Unit::Bohr;
    else if (match("angstrom") || match("A")) u = Unit::Angstrom;
    else if (match("fs")) u = Unit::Femtosecond;
    else if (match("ps")) u = Unit::Picosecond;
    else if (match("amu")) u = Unit::Amu;
    else if (match("V/m")) u = Unit::VoltPerMeter;
    else if (match("W/cm^2") || match("W/cm2")) u = Unit::WattPerCm2;
    else if (match("TW/cm^2") || match("TW/cm2")) u = Unit::TerawattPerCm2;
    else throw UnitError("unknown unit name '" + std::string(name) + "'");
    if (dimension_of(u) != expected) {
        throw UnitError("unit '" + std::string(name) + "' has the wrong dimension here");
    }
    return u;
}

double field_from_intensity(double intensity_au) {
    if (intensity_au < 0.0) throw UnitError("negative intensity");
    // In atomic units the relation reduces to F^2 = I with our normalization
    // of the intensity unit, since 1 au intensity corresponds to F = 1 au.
    return std::sqrt(intensity_au);
}

double intensity_from_field(double field_au) {
    return field_au * field_au;
}

}  // namespace reflectal::units
