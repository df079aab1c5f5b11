"""Smoke tests for the python bindings: fast end-to-end touches of the main
operations. The exhaustive numerics live in the C++ suites."""

import math
import sys

import reflectal as rf


def check(cond, label):
    if not cond:
        print(f"FAIL {label}")
        sys.exit(1)
    print(f"ok   {label}")


def main():
    # units
    ev = rf.convert(1.0, "hartree", "eV")
    check(abs(ev - 27.2114) < 1e-3, "hartree -> eV")
    back = rf.convert(rf.convert(4.1, "eV", "hartree"), "hartree", "eV")
    check(abs(back - 4.1) < 1e-12, "eV round-trip")
    f0 = rf.field_from_intensity(rf.convert(1.0, "TW/cm^2", "au"))
    check(abs(rf.convert(f0, "au", "V/m") - 2.8e9) / 2.8e9 < 0.02, "1 TW/cm^2 field")

    # transmission zeros (exact in pi units, rounding-limited in radians)
    for n in range(6):
        check(rf.transmission_pi_units(n + 0.5, 0.5) == 0.0, f"P=0 at n={n}")
    check(rf.transmission(0.5 * math.pi, 0.5) < 1e-30, "P~0 in radians")

    # grid + curves + dressing
    grid = rf.RadialGrid(0.8, 12.0, 512)
    check(len(grid) == 512 and abs(grid.dr - 11.2 / 511) < 1e-12, "grid spacing")
    curves = rf.surrogate_hi(rf.SurrogateParams())
    pair = rf.dress(curves, 2, 0.145, f0)
    feats = rf.extract_features(pair)
    check(feats.e_b > feats.e_t and feats.alpha > 0, "crossing features")

    # eigenstates
    states = rf.eigensolve(curves, grid, 6)
    check(len(states) == 6, "eigensolve count")
    gaps = [b.energy - a.energy for a, b in zip(states, states[1:])]
    check(all(g > 0 for g in gaps), "levels ascend")
    check(all(b < a for a, b in zip(gaps, gaps[1:])), "anharmonic gaps shrink")

    # manifold roots force P ~ 0
    curve = rf.manifold(curves, 2, 3, states[3].energy, 0.13, 0.158, 150, f0)
    check(len(curve.roots) >= 1, "manifold has roots")
    check(all(r.transmission < 1e-10 for r in curve.roots), "roots block transmission")

    # alignment search API
    cands = rf.find_control_frequency(curve, curve, 1e-6)
    check(len(cands) >= len(curve.roots), "self-alignment")
    check(cands[0].quality < 1e-9, "self-alignment quality")

    # short propagation conserves norm without an absorber
    field = rf.FieldSpec()
    field.f0 = f0
    field.omega = 0.145
    field.ramp = 10 * 2 * math.pi / field.omega
    config = rf.PropagationConfig()
    config.dt = 1.78
    config.duration = 200 * config.dt
    config.output_stride = 50
    config.r_flux = 6.0
    result = rf.propagate(curves, grid, field, config, states[3])
    norms = result.norms
    total = norms[-1].sum()
    check(abs(total - 1.0) < 1e-8, "norm conservation")

    b = rf.branching(0.1, 0.1, 0.1)
    check(abs(b.ratio - 0.5) < 1e-14, "branching ratio")

    print("python smoke: all checks passed")


if __name__ == "__main__":
    main()
