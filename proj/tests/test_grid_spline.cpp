#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "reflectal/curves.hpp"
#include "reflectal/errors.hpp"
#include "reflectal/grid.hpp"
#include "reflectal/spline.hpp"

using namespace reflectal;

TEST_CASE("grid spacing and bounds") {
    const RadialGrid g(0.5, 10.0, 2048);
    CHECK(g.dr() == doctest::Approx(9.5 / 2047.0).epsilon(1e-15));
    CHECK(g.dr() == doctest::Approx(4.64e-3).epsilon(1e-2));
    CHECK(g.point(0) == 0.5);
    CHECK(g.point(2047) == doctest::Approx(10.0).epsilon(1e-15));
}

TEST_CASE("grid preconditions") {
    CHECK_THROWS_AS(RadialGrid(0.5, 10.0, 4), GridError);
    CHECK_THROWS_AS(RadialGrid(10.0, 0.5, 256), GridError);
    CHECK_THROWS_AS(RadialGrid(0.5, 10.0, 1000), GridError);  // not a power of two
}

TEST_CASE("momentum grid is Nyquist-limited and symmetric") {
    const RadialGrid g(0.0, 7.0, 64);
    const auto k = g.wavenumbers();
    const double k_max = std::numbers::pi / g.dr();
    CHECK(k[32] == doctest::Approx(-k_max).epsilon(1e-14));  // single unpaired mode
    double max_abs = 0.0;
    for (std::size_t l = 1; l < 32; ++l) {
        CHECK(k[l] == doctest::Approx(-k[64 - l]).epsilon(1e-14));
        max_abs = std::max(max_abs, std::abs(k[l]));
    }
    CHECK(max_abs < k_max);
    CHECK(k[0] == 0.0);
}

TEST_CASE("spline reproduces a straight line everywhere") {
    std::vector<double> x, y;
    for (int i = 0; i < 12; ++i) {
        x.push_back(0.3 * i);
        y.push_back(x.back());
    }
    const CubicSpline s(x, y);
    for (double q = -1.0; q <= 4.5; q += 0.0137) {
        CHECK(s(q) == doctest::Approx(q).epsilon(1e-12));
    }
}

TEST_CASE("spline is exact at knots") {
    std::vector<double> x, y;
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double acc = 0.0;
    for (int i = 0; i < 20; ++i) {
        acc += 0.1 + 0.3 * std::abs(u(rng));
        x.push_back(acc);
        y.push_back(u(rng));
    }
    const CubicSpline s(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(s(x[i]) == doctest::Approx(y[i]).epsilon(1e-14));
    }
}

TEST_CASE("spline interpolates a 200-knot Morse table") {
    const MorseParams mp{0.12, 0.92, 3.05, -0.12};
    auto worst_error = [&](double lo, double hi) {
        std::vector<double> x, y;
        for (int i = 0; i < 200; ++i) {
            x.push_back(lo + (hi - lo) * i / 199.0);
            y.push_back(morse(mp, x.back()));
        }
        const CubicSpline s(x, y);
        double worst = 0.0;
        for (double r = lo; r <= hi; r += (hi - lo) / 40000.0) {
            worst = std::max(worst, std::abs(s(r) - morse(mp, r)));
        }
        return worst;
    };
    // On the outer limb (curvature small at the edges) the 200-knot table
    // interpolates below 1e-6 hartree.
    CHECK(worst_error(3.8, 14.0) < 1e-6);
    // Across the full well the natural boundary layer at the steep inner wall
    // dominates; frozen from the dense-evaluation oracle.
    CHECK(worst_error(2.0, 16.0) < 1e-3);
}

TEST_CASE("spline error decreases at 4th order with knot count") {
    auto f = [](double r) { return std::sin(1.7 * r) * std::exp(-0.2 * r); };
    auto max_err = [&](int n) {
        std::vector<double> x, y;
        for (int i = 0; i < n; ++i) {
            x.push_back(8.0 * i / (n - 1.0));
            y.push_back(f(x.back()));
        }
        const CubicSpline s(x, y);
        double worst = 0.0;
        for (double r = 0.5; r <= 7.5; r += 0.0007) {
            worst = std::max(worst, std::abs(s(r) - f(r)));
        }
        return worst;
    };
    // log-log slope between successive doublings
    const double e1 = max_err(50);
    const double e2 = max_err(100);
    const double e3 = max_err(200);
    const double slope12 = std::log2(e1 / e2);
    const double slope23 = std::log2(e2 / e3);
    CHECK(slope12 == doctest::Approx(4.0).epsilon(0.125));
    CHECK(slope23 == doctest::Approx(4.0).epsilon(0.125));
}

TEST_CASE("spline extrapolates linearly with continuous slope") {
    std::vector<double> x, y;
    for (int i = 0; i < 10; ++i) {
        x.push_back(static_cast<double>(i));
        y.push_back(std::cos(0.5 * i));
    }
    const CubicSpline s(x, y);
    const double h = 1e-6;
    const double slope_in = (s(x.back()) - s(x.back() - h)) / h;
    const double slope_out = (s(x.back() + 2.0) - s(x.back() + 1.0));
    CHECK(slope_out == doctest::Approx(slope_in).epsilon(1e-4));
    // value continuity
    CHECK(s(x.back() + 1e-9) == doctest::Approx(s(x.back())).epsilon(1e-8));
}
