#include "reflectal/spline.hpp"

#include <algorithm>
#include <stdexcept>

#include "reflectal/errors.hpp"

namespace reflectal {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 4 || y_.size() != n) {
        throw ParseError("cubic spline needs at least 4 matching (x, y) points");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(x_[i] > x_[i - 1])) {
            throw ParseError("spline abscissae must be strictly increasing");
        }
    }

    // Solve the tridiagonal system for the interior second derivatives;
    // natural boundary m_0 = m_{n-1} = 0.
    m_.assign(n, 0.0);
    std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = x_[i] - x_[i - 1];
        const double h1 = x_[i + 1] - x_[i];
        diag[i] = 2.0 * (h0 + h1);
        upper[i] = h1;
        rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
    }
    // Thomas algorithm over i = 1 .. n-2 (lower diagonal equals previous h).
    for (std::size_t i = 2; i + 1 < n; ++i) {
        const double h0 = x_[i] - x_[i - 1];
        const double w = h0 / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
        if (i == 1) break;
    }

    const double h_first = x_[1] - x_[0];
    slope_left_ = (y_[1] - y_[0]) / h_first - h_first * (2.0 * m_[0] + m_[1]) / 6.0;
    const double h_last = x_[n - 1] - x_[n - 2];
    slope_right_ =
        (y_[n - 1] - y_[n - 2]) / h_last + h_last * (2.0 * m_[n - 1] + m_[n - 2]) / 6.0;
}

std::size_t CubicSpline::interval(double x) const {
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const auto idx = static_cast<std::size_t>(it - x_.begin());
    if (idx == 0) return 0;
    if (idx >= x_.size()) return x_.size() - 2;
    return idx - 1;
}

double CubicSpline::operator()(double x) const {
    if (x <= x_.front()) return y_.front() + slope_left_ * (x - x_.front());
    if (x >= x_.back()) return y_.back() + slope_right_ * (x - x_.back());
    const std::size_t i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double b = (x - x_[i]) / h;
    return a * y_[i] + b * y_[i + 1] +
           ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::derivative(double x) const {
    if (x <= x_.front()) return slope_left_;
    if (x >= x_.back()) return slope_right_;
    const std::size_t i = interval(x);
    const double h = x_[i + 1] - x_[i];
    const double a = (x_[i + 1] - x) / h;
    const double b = (x - x_[i]) / h;
    return (y_[i + 1] - y_[i]) / h +
           ((1.0 - 3.0 * a * a) * m_[i] + (3.0 * b * b - 1.0) * m_[i + 1]) * h / 6.0;
}

}  // namespace reflectal
