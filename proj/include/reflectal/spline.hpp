// Natural cubic spline with linear extrapolation outside the data range.
#pragma once

#include <vector>

namespace reflectal {

class CubicSpline {
public:
    /// x strictly increasing, >= 4 points. Natural boundary (zero second
    /// derivative at both ends); beyond the range the spline continues
    /// linearly with the boundary slope.
    CubicSpline(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double derivative(double x) const;

    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }

private:
    std::size_t interval(double x) const;

    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_;  // second derivatives at knots
    double slope_left_;
    double slope_right_;
};

}  // namespace reflectal
