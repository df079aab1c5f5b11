#include "reflectal/zn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "optimize.hpp"
#include "reflectal/errors.hpp"

namespace reflectal::zn {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - static_cast<double>(j) * p2) /
                     (static_cast<double>(j) + 1.0);
            }
            pp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = -z;
        x[static_cast<std::size_t>(n - 1 - i)] = z;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[static_cast<std::size_t>(n - 1 - i)] = w[static_cast<std::size_t>(i)];
    }
}

double action_quadrature(const std::function<double(double)>& e2, double energy,
                         double mass, double t1, double t2, int order) {
    std::vector<double> x, w;
    gauss_legendre(order, x, w);
    const double mid = 0.5 * (t1 + t2);
    const double half = 0.5 * (t2 - t1);
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double theta = 0.5 * kPi * x[i];
        const double r = mid + half * std::sin(theta);
        const double kin = std::max(0.0, energy - e2(r));
        sum += w[i] * std::sqrt(2.0 * mass * kin) * half * std::cos(theta) * 0.5 * kPi;
    }
    return sum;
}

}  // namespace

double arg_gamma_imag(double y) {
    if (!(y > 0.0)) throw ZnDomainError("arg Gamma(iy) needs y > 0");
    // Lanczos (g = 7, 9 terms) for Gamma(1 + iy), then Gamma(iy) = Gamma(1+iy)/(iy).
    static constexpr std::array<double, 9> coeff = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    const std::complex<double> z(1.0, y);
    std::complex<double> a(coeff[0], 0.0);
    for (int k = 1; k < 9; ++k) {
        a += coeff[static_cast<std::size_t>(k)] / (z - 1.0 + static_cast<double>(k));
    }
    const std::complex<double> t = z + 6.5;  // z + g - 0.5
    const std::complex<double> gamma1 =
        std::sqrt(2.0 * kPi) * std::pow(t, z - 0.5) * std::exp(-t) * a;
    const std::complex<double> gamma0 = gamma1 / std::complex<double>(0.0, y);
    return std::arg(gamma0);
}

double action_sigma(const std::function<double(double)>& e2, double energy,
                    double mass, double x_well, double r_lo, double r_hi) {
    const double e_ref = e2(x_well);
    if (!(energy > e_ref)) {
        throw ZnDomainError("action_sigma: energy not above the upper adiabat bottom");
    }
    auto excess = [&](double r) { return energy - e2(r); };

    // March outward from the well until the integrand changes sign, then bisect.
    auto turning_point = [&](double direction) -> double {
        double step = 1e-3;
        double inside = x_well;
        double f_in = excess(inside);
        for (int it = 0; it < 400; ++it) {
            double outside = inside + direction * step;
            if (outside < r_lo || outside > r_hi) {
                throw ZnDomainError("action_sigma: turning point outside curve domain");
            }
            const double f_out = excess(outside);
            if (f_out <= 0.0) {
                return detail::bisect(excess, std::min(inside, outside),
                                      std::max(inside, outside),
                                      direction > 0 ? f_in : f_out,
                                      direction > 0 ? f_out : f_in, 1e-10);
            }
            inside = outside;
            f_in = f_out;
            step *= 1.35;
        }
        throw ZnDomainError("action_sigma: no turning point found");
    };

    const double t1 = turning_point(-1.0);
    const double t2 = turning_point(+1.0);

    double prev = action_quadrature(e2, energy, mass, t1, t2, 48);
    for (int order = 96; order <= 768; order *= 2) {
        const double next = action_quadrature(e2, energy, mass, t1, t2, order);
        if (std::abs(next - prev) <= 1e-8 * std::max(1e-300, std::abs(next))) {
            return next;
        }
        prev = next;
    }
    return prev;
}

ZnParameters zn_assemble(const DressedPair& pair, const CrossingFeatures& features,
                         double energy) {
    if (!(features.alpha > 0.0)) {
        throw DegenerateGeometryError("zn_assemble needs alpha > 0");
    }
    ZnParameters zp;
    zp.energy = energy;
    zp.alpha = features.alpha;
    zp.gamma = features.gamma;

    const double half_gap = 0.5 * (features.e_b - features.e_t);
    zp.beta = (energy - 0.5 * (features.e_b + features.e_t)) / half_gap;
    if (!(zp.beta > 1.0)) {
        throw ZnDomainError("energy below the upper-adiabat bottom (beta <= 1)");
    }

    zp.f = 0.72 - 0.62 * std::pow(zp.alpha, 0.715);
    const double inner = 1.0 - zp.f / (zp.beta * zp.beta);
    if (inner < 0.0) {
        throw ZnDomainError("1 - f/beta^2 negative: outside the formula domain");
    }
    const double root_ab = std::sqrt(zp.alpha * zp.beta);
    zp.p = std::exp(-kPi / (4.0 * root_ab) * std::sqrt(2.0 / (1.0 + std::sqrt(inner))));

    const double s = std::sqrt(1.0 - 1.0 / (zp.beta * zp.beta));
    zp.delta = kPi / (16.0 * root_ab) * std::sqrt(6.0 + 10.0 * s) / (1.0 + s);

    const double y = zp.delta / kPi;
    zp.phi_s = y * std::log(y) - y - arg_gamma_imag(y) - kPi / 4.0;

    zp.sigma = action_sigma([&pair](double r) { return pair.e2(r); }, energy,
                            features.mass, features.x_b, pair.r_lo, pair.r_hi);

    const double a4 = std::pow(zp.alpha, 0.25);
    zp.g = 0.23 * a4 / (a4 + 0.75) * std::pow(40.0, -zp.sigma);

    zp.psi = zp.sigma - zp.phi_s - zp.g;
    return zp;
}

double transmission(double psi, double p) {
    const double c = std::cos(psi);
    const double num = 4.0 * c * c;
    return num / (num + p * p / (1.0 - p));
}

double transmission(const ZnParameters& params) {
    return transmission(params.psi, params.p);
}

double cos_pi(double x) {
    // Reduce by the nearest half integer; the subtraction is exact for the
    // magnitudes used here, so cos(pi/2 * odd) comes out exactly zero.
    const double two_x = 2.0 * x;
    const double k = std::nearbyint(two_x);
    const double r = two_x - k;  // in [-1/2, 1/2]
    const auto ki = static_cast<long long>(k);
    const double phase = 0.5 * kPi * r;
    if (ki % 2 == 0) {
        const double c = std::cos(phase);
        return (ki % 4 == 0) ? c : -c;
    }
    const double s = std::sin(phase);
    const long long m = (ki % 4 + 4) % 4;
    return (m == 1) ? -s : s;
}

double transmission_pi_units(double psi_over_pi, double p) {
    const double c = cos_pi(psi_over_pi);
    const double num = 4.0 * c * c;
    return num / (num + p * p / (1.0 - p));
}

ManifoldCurve manifold(const CurveSet& curves, int channel, int v, double e_v,
                       std::pair<double, double> omega_range, std::size_t nsamples,
                       double f0) {
    if (nsamples < 2) throw Error("manifold needs at least 2 samples");
    if (!(omega_range.second > omega_range.first)) {
        throw Error("manifold needs an ascending omega range");
    }

    ManifoldCurve curve;
    curve.v = v;
    curve.channel = channel;

    auto evaluate = [&](double omega, ZnParameters& out) -> bool {
        try {
            const DressedPair pair = dress(curves, channel, omega, f0);
            const CrossingFeatures feats = extract_features(pair);
            out = zn_assemble(pair, feats, e_v + omega);
            return true;
        } catch (const TopologyError&) {
        } catch (const DegenerateGeometryError&) {
        } catch (const ZnDomainError&) {
        }
        return false;
    };

    const double span = omega_range.second - omega_range.first;
    curve.omega.resize(nsamples);
    curve.psi_over_pi.assign(nsamples, 0.0);
    curve.transmission.assign(nsamples, 0.0);
    curve.hop_p.assign(nsamples, 0.0);
    curve.valid.assign(nsamples, 0);

    std::size_t n_valid = 0;
    for (std::size_t i = 0; i < nsamples; ++i) {
        const double omega = omega_range.first +
                             span * static_cast<double>(i) / static_cast<double>(nsamples - 1);
        curve.omega[i] = omega;
        ZnParameters zp;
        if (evaluate(omega, zp)) {
            curve.psi_over_pi[i] = zp.psi / kPi;
            curve.transmission[i] = transmission(zp);
            curve.hop_p[i] = zp.p;
            curve.valid[i] = 1;
            ++n_valid;
        }
    }
    if (n_valid == 0) {
        throw WindowError("no valid manifold samples in the requested window");
    }

    // Gap bookkeeping: contiguous invalid runs.
    for (std::size_t i = 0; i < nsamples;) {
        if (curve.valid[i]) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < nsamples && !curve.valid[j + 1]) ++j;
        curve.gaps.emplace_back(curve.omega[i], curve.omega[j]);
        i = j + 1;
    }

    // Root location between adjacent valid samples. Psi is smooth there, so a
    // bracket can contain at most a few half-integer levels; refine each with
    // a regula-falsi (Illinois) iteration on Psi - (n + 1/2) pi.
    for (std::size_t i = 0; i + 1 < nsamples; ++i) {
        if (!curve.valid[i] || !curve.valid[i + 1]) continue;
        const double psi_a = curve.psi_over_pi[i] * kPi;
        const double psi_b = curve.psi_over_pi[i + 1] * kPi;
        const double lo = std::min(psi_a, psi_b);
        const double hi = std::max(psi_a, psi_b);
        const int n_lo = static_cast<int>(std::ceil(lo / kPi - 0.5));
        const int n_hi = static_cast<int>(std::floor(hi / kPi - 0.5));
        for (int n = n_lo; n <= n_hi; ++n) {
            if (n < 0) continue;
            const double target = (static_cast<double>(n) + 0.5) * kPi;
            double a = curve.omega[i], b = curve.omega[i + 1];
            double fa = psi_a - target, fb = psi_b - target;
            if (fa * fb > 0.0 && fa != 0.0) continue;
            double root = 0.5 * (a + b);
            ZnParameters zp_root;
            bool ok = true;
            int side = 0;
            for (int it = 0; it < 80; ++it) {
                root = (fb == fa) ? 0.5 * (a + b) : (a * fb - b * fa) / (fb - fa);
                if (!evaluate(root, zp_root)) {
                    ok = false;  // refinement hit a gap edge; drop the root
                    break;
                }
                const double f_root = zp_root.psi - target;
                if (std::abs(f_root) < 1e-10 * kPi) break;
                if ((f_root < 0.0) == (fa < 0.0)) {
                    a = root;
                    fa = f_root;
                    if (side == -1) fb *= 0.5;
                    side = -1;
                } else {
                    b = root;
                    fb = f_root;
                    if (side == +1) fa *= 0.5;
                    side = +1;
                }
            }
            if (ok) {
                curve.roots.push_back({root, n, transmission(zp_root)});
            }
        }
    }
    std::sort(curve.roots.begin(), curve.roots.end(),
              [](const ManifoldRoot& a, const ManifoldRoot& b) { return a.omega < b.omega; });
    return curve;
}

bool interpolate_manifold(const ManifoldCurve& curve, double omega,
                          double& psi_over_pi, double& hop_p) {
    const auto& om = curve.omega;
    if (om.empty() || omega < om.front() || omega > om.back()) return false;
    auto it = std::upper_bound(om.begin(), om.end(), omega);
    std::size_t hi = static_cast<std::size_t>(it - om.begin());
    if (hi == 0) hi = 1;
    if (hi >= om.size()) hi = om.size() - 1;
    const std::size_t lo = hi - 1;
    if (!curve.valid[lo] || !curve.valid[hi]) return false;
    const double t = (omega - om[lo]) / (om[hi] - om[lo]);
    psi_over_pi = (1.0 - t) * curve.psi_over_pi[lo] + t * curve.psi_over_pi[hi];
    hop_p = (1.0 - t) * curve.hop_p[lo] + t * curve.hop_p[hi];
    return true;
}

std::vector<AlignmentCandidate> find_control_frequency(const ManifoldCurve& first,
                                                       const ManifoldCurve& second,
                                                       double tolerance_omega) {
    std::vector<AlignmentCandidate> out;
    for (const auto& ra : first.roots) {
        for (const auto& rb : second.roots) {
            if (std::abs(ra.omega - rb.omega) >= tolerance_omega) continue;
            AlignmentCandidate cand;
            cand.omega = 0.5 * (ra.omega + rb.omega);
            cand.n_first = ra.n;
            cand.n_second = rb.n;
            double quality = 0.0;
            double psi_pi = 0.0, p = 0.0;
            for (const auto* curve : {&first, &second}) {
                if (interpolate_manifold(*curve, cand.omega, psi_pi, p)) {
                    quality += transmission(psi_pi * kPi, p);
                } else {
                    quality += 1.0;  // gap: count as fully transmitting
                }
            }
            cand.quality = quality;
            out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end(), [](const AlignmentCandidate& a,
                                         const AlignmentCandidate& b) {
        return a.quality < b.quality;
    });
    return out;
}

}  // namespace reflectal::zn
