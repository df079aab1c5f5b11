#include "reflectal/bound.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>

#include "reflectal/errors.hpp"
#include "reflectal/fft.hpp"

namespace reflectal {

std::vector<VibrationalState> eigensolve(const Curve& v1, double mass,
                                         const RadialGrid& grid,
                                         std::size_t n_states) {
    const std::size_t n = grid.size();
    if (n_states == 0) throw ResolutionError("eigensolve: n_states must be positive");

    // Kinetic matrix is Toeplitz: row built by transforming the spectral
    // multiplier k^2/(2m) back to the position representation.
    const auto k = grid.wavenumbers();
    std::vector<std::complex<double>> eps(n);
    for (std::size_t l = 0; l < n; ++l) eps[l] = k[l] * k[l] / (2.0 * mass);
    Fft fft(n);
    fft.backward(eps.data());
    std::vector<double> kin_row(n);
    for (std::size_t d = 0; d < n; ++d) kin_row[d] = eps[d].real() / static_cast<double>(n);

    Eigen::MatrixXd h(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double t = kin_row[i - j];
            h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = t;
            h(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = t;
        }
        h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) += v1(grid.point(i));
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw Error("eigensolve: diagonalization failed");
    }

    const double asymptote = v1(grid.r_max());
    std::size_t n_bound = 0;
    while (n_bound < n && solver.eigenvalues()(static_cast<Eigen::Index>(n_bound)) < asymptote) {
        ++n_bound;
    }
    if (n_states >= n_bound) {
        throw ResolutionError("eigensolve: only " + std::to_string(n_bound) +
                              " bound levels on this grid, " + std::to_string(n_states) +
                              " requested");
    }

    const double inv_sqrt_dr = 1.0 / std::sqrt(grid.dr());
    std::vector<VibrationalState> states;
    states.reserve(n_states);
    for (std::size_t s = 0; s < n_states; ++s) {
        VibrationalState st;
        st.v = static_cast<int>(s);
        st.energy = solver.eigenvalues()(static_cast<Eigen::Index>(s));
        st.chi.resize(n);
        double peak = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            st.chi[i] = solver.eigenvectors()(static_cast<Eigen::Index>(i),
                                              static_cast<Eigen::Index>(s)) *
                        inv_sqrt_dr;
            peak = std::max(peak, std::abs(st.chi[i]));
        }
        // Deterministic sign: first significant lobe positive.
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(st.chi[i]) > 1e-3 * peak) {
                if (st.chi[i] < 0.0) {
                    for (auto& c : st.chi) c = -c;
                }
                break;
            }
        }
        if (std::abs(st.chi.front()) > 1e-6 || std::abs(st.chi.back()) > 1e-6) {
            throw ResolutionError("eigensolve: state v=" + std::to_string(st.v) +
                                  " touches the grid boundary; enlarge the grid");
        }
        states.push_back(std::move(st));
    }
    return states;
}

int count_nodes(const VibrationalState& state, const Curve& v1, const RadialGrid& grid) {
    int nodes = 0;
    double last = 0.0;
    for (std::size_t i = 0; i < state.chi.size(); ++i) {
        if (v1(grid.point(i)) >= state.energy) continue;  // classically forbidden
        const double c = state.chi[i];
        if (last != 0.0 && c != 0.0 && (c < 0.0) != (last < 0.0)) ++nodes;
        if (c != 0.0) last = c;
    }
    return nodes;
}

}  // namespace reflectal
