#include <doctest.h>

#include <cmath>

#include "reflectal/bound.hpp"
#include "reflectal/curves.hpp"
#include "reflectal/errors.hpp"
#include "reflectal/grid.hpp"

using namespace reflectal;

TEST_CASE("harmonic spectrum to 1e-9 relative for v <= 10") {
    const double m = 1804.66;
    const double omega = 0.011;
    const double r0 = 4.0;
    auto v1 = [=](double r) { return 0.5 * m * omega * omega * (r - r0) * (r - r0); };
    const RadialGrid grid(1.0, 7.0, 512);
    const auto states = eigensolve(v1, m, grid, 11);
    for (const auto& st : states) {
        const double exact = (st.v + 0.5) * omega;
        CHECK(st.energy == doctest::Approx(exact).epsilon(1e-9));
    }
}

TEST_CASE("Morse spectrum matches the closed form to 1e-8 hartree") {
    const MorseParams mp{0.12, 0.92, 3.05, 0.0};
    const double m = 0.99 * 1822.888;
    auto v1 = [&](double r) { return morse(mp, r); };
    const RadialGrid grid(0.8, 12.0, 1024);
    const auto states = eigensolve(v1, m, grid, 9);
    const double w0 = mp.a * std::sqrt(2.0 * mp.d_e / m);
    for (const auto& st : states) {
        const double x = w0 * (st.v + 0.5);
        const double exact = x - x * x / (4.0 * mp.d_e);
        CHECK(std::abs(st.energy - exact) < 1e-8);
    }
}

TEST_CASE("level spacing shrinks with v and eigenvalues converge under refinement") {
    const CurveSet set = surrogate_hi();
    const double m = set.mass;
    const RadialGrid coarse(0.8, 12.0, 1024);
    const RadialGrid fine(0.8, 12.0, 2048);
    const auto a = eigensolve(set.v[0], m, coarse, 8);
    const auto b = eigensolve(set.v[0], m, fine, 8);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(std::abs(a[i].energy - b[i].energy) < 1e-10);
        if (i > 0) CHECK(a[i].energy > a[i - 1].energy);
    }
    for (std::size_t i = 2; i < a.size(); ++i) {
        const double gap_hi = a[i].energy - a[i - 1].energy;
        const double gap_lo = a[i - 1].energy - a[i - 2].energy;
        CHECK(gap_hi < gap_lo);
    }
    const double asym = set.v[0](12.0);
    for (const auto& st : a) CHECK(st.energy < asym);
}

TEST_CASE("states are dR-orthonormal") {
    const CurveSet set = surrogate_hi();
    const RadialGrid grid(0.8, 12.0, 1024);
    const auto states = eigensolve(set.v[0], set.mass, grid, 6);
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i; j < states.size(); ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < states[i].chi.size(); ++k) {
                dot += states[i].chi[k] * states[j].chi[k];
            }
            dot *= grid.dr();
            if (i == j) {
                CHECK(std::abs(dot - 1.0) < 1e-10);
            } else {
                CHECK(std::abs(dot) < 1e-8);
            }
        }
    }
}

TEST_CASE("node count equals the vibrational index") {
    const CurveSet set = surrogate_hi();
    const RadialGrid grid(0.8, 12.0, 1024);
    const auto states = eigensolve(set.v[0], set.mass, grid, 7);
    for (const auto& st : states) {
        CHECK(count_nodes(st, set.v[0], grid) == st.v);
    }
}

TEST_CASE("requesting more states than bound levels raises ResolutionError") {
    // Shallow Morse well with only a few bound levels.
    const MorseParams mp{0.004, 1.2, 3.0, 0.0};
    const double m = 2000.0;
    auto v1 = [&](double r) { return morse(mp, r); };
    const RadialGrid grid(1.0, 17.0, 1024);
    // v_max ~ sqrt(2 m D)/a - 1/2 ~ 2.8: three bound states
    CHECK_THROWS_AS(eigensolve(v1, m, grid, 6), ResolutionError);
    const auto ok = eigensolve(v1, m, grid, 2);
    CHECK(ok.size() == 2);
}

TEST_CASE("grid too small for the requested state raises ResolutionError") {
    const CurveSet set = surrogate_hi();
    // The surrogate well sits at 3.05; a cramped box distorts high states and
    // leaves visible boundary amplitude.
    const RadialGrid grid(2.6, 4.2, 256);
    CHECK_THROWS_AS(eigensolve(set.v[0], set.mass, grid, 8), ResolutionError);
}
