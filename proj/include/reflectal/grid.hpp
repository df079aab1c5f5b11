// Uniform radial grid and its conjugate (FFT-ordered) momentum grid.
#pragma once

#include <cstddef>
#include <vector>

namespace reflectal {

class RadialGrid {
public:
    /// N must be a power of two >= 8 and r_max > r_min; throws GridError otherwise.
    RadialGrid(double r_min, double r_max, std::size_t n);

    double r_min() const { return r_min_; }
    double r_max() const { return r_max_; }
    double dr() const { return dr_; }
    std::size_t size() const { return n_; }

    double point(std::size_t j) const { return r_min_ + static_cast<double>(j) * dr_; }
    std::vector<double> points() const;

    /// FFT-ordered wavenumbers k_l = 2*pi*s_l/(N dR), s_l = l for l <= N/2,
    /// l - N above. k at l = N/2 is the single unpaired Nyquist mode pi/dR.
    std::vector<double> wavenumbers() const;

    /// Index of the grid point closest to r.
    std::size_t index_near(double r) const;

private:
    double r_min_;
    double r_max_;
    double dr_;
    std::size_t n_;
};

}  // namespace reflectal
