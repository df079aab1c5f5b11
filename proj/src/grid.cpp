#include "reflectal/grid.hpp"

#include <cmath>
#include <numbers>

#include "reflectal/errors.hpp"

namespace reflectal {

RadialGrid::RadialGrid(double r_min, double r_max, std::size_t n)
    : r_min_(r_min), r_max_(r_max), n_(n) {
    if (!(r_max > r_min)) {
        throw GridError("radial grid needs r_max > r_min");
    }
    if (n < 8) {
        throw GridError("radial grid needs at least 8 points");
    }
    if ((n & (n - 1)) != 0) {
        throw GridError("radial grid size must be a power of two");
    }
    dr_ = (r_max_ - r_min_) / static_cast<double>(n_ - 1);
}

std::vector<double> RadialGrid::points() const {
    std::vector<double> r(n_);
    for (std::size_t j = 0; j < n_; ++j) r[j] = point(j);
    return r;
}

std::vector<double> RadialGrid::wavenumbers() const {
    std::vector<double> k(n_);
    const double dk = 2.0 * std::numbers::pi / (static_cast<double>(n_) * dr_);
    for (std::size_t l = 0; l < n_; ++l) {
        const auto s = (l < n_ / 2) ? static_cast<double>(l)
                                    : static_cast<double>(l) - static_cast<double>(n_);
        k[l] = dk * s;
    }
    return k;
}

std::size_t RadialGrid::index_near(double r) const {
    if (r <= r_min_) return 0;
    if (r >= r_max_) return n_ - 1;
    return static_cast<std::size_t>(std::lround((r - r_min_) / dr_));
}

}  // namespace reflectal
