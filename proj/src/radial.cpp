#include "diskflow/radial.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "diskflow/quadrature.hpp"

namespace diskflow {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCongruenceTol = 1e-9;

double snap_integer(double x, double tol) {
    const double r = std::round(x);
    return std::abs(x - r) <= tol ? r : x;
}

}  // namespace

RadialHamiltonian::RadialHamiltonian(double amplitude_, double scale_,
                                     const CutoffProfile& cutoff_)
    : amplitude(amplitude_), scale(scale_), cutoff(cutoff_) {
    if (!(scale > 0.0) || !std::isfinite(scale) || !std::isfinite(amplitude)) {
        throw std::invalid_argument("RadialHamiltonian: scale must be positive and finite");
    }
}

RadialHamiltonian RadialHamiltonian::zero() {
    return RadialHamiltonian(0.0, 1.0, CutoffProfile(0.25));
}

double RadialHamiltonian::h(double s) const {
    if (amplitude == 0.0) return 0.0;
    return amplitude * cutoff.chi(s / scale);
}

double RadialHamiltonian::dh(double s) const {
    if (amplitude == 0.0) return 0.0;
    return (amplitude / scale) * cutoff.dchi(s / scale);
}

double RadialHamiltonian::d2h(double s) const {
    if (amplitude == 0.0) return 0.0;
    return (amplitude / (scale * scale)) * cutoff.d2chi(s / scale);
}

Vec2 radial_flow(const RadialHamiltonian& ham, const Vec2& z, double t) {
    const double s = z[0] * z[0] + z[1] * z[1];
    const double angle = -2.0 * ham.dh(s) * t;
    const double c = std::cos(angle);
    const double sn = std::sin(angle);
    return {c * z[0] - sn * z[1], sn * z[0] + c * z[1]};
}

Sp2Matrix radial_dflow(const RadialHamiltonian& ham, const Vec2& z0, double t) {
    const double s0 = z0[0] * z0[0] + z0[1] * z0[1];
    const double a = -2.0 * ham.dh(s0);
    const double b = -4.0 * ham.d2h(s0);
    // J z0 z0^T has rows (-y0 x0, -y0 y0) and (x0 x0, x0 y0).
    const double x = z0[0];
    const double y = z0[1];
    Sp2Matrix shear{1.0 - b * t * x * y, -b * t * y * y,
                    b * t * x * x, 1.0 + b * t * x * y};
    return Sp2Matrix::rotation(a * t) * shear;
}

double radial_action(const RadialHamiltonian& ham, const Vec2& z) {
    const double s = z[0] * z[0] + z[1] * z[1];
    return ham.h(s) - s * ham.dh(s);
}

double calabi(const RadialHamiltonian& ham) {
    if (ham.is_zero()) return 0.0;
    // 4 pi int r h(r^2) dr equals 2 pi int h(s) ds after s = r^2.
    const double integral = integrate_adaptive(
        [&ham](double s) { return ham.h(s); }, 0.0, ham.scale, 1e-10 / (2.0 * kPi));
    return 2.0 * kPi * integral;
}

FixedPointSet fixed_point_radii(const RadialHamiltonian& ham, int k) {
    if (k <= 0) throw std::invalid_argument("fixed_point_radii: k must be positive");
    FixedPointSet out;
    if (ham.is_zero()) {
        out.squared_intervals.push_back({0.0, std::numeric_limits<double>::infinity()});
        return out;
    }
    const double delta = ham.cutoff.delta();
    // Slope of h per unit chi-slope; the k-th iterate fixes the circle of
    // squared radius s exactly when k h'(s) / pi is an integer, and
    // k h'(s) / pi = A chi'(s / scale) with A as below.
    const double A = static_cast<double>(k) * ham.amplitude / (kPi * ham.scale);

    // Exterior: h' vanishes identically for s >= scale.
    out.squared_intervals.push_back({ham.scale, std::numeric_limits<double>::infinity()});

    // Plateau: chi' = -1 there, so the whole inner disk satisfies the
    // congruence exactly when A is an integer.
    if (std::abs(A - std::round(A)) <= kCongruenceTol) {
        out.squared_intervals.push_back({0.0, (1.0 - 2.0 * delta) * ham.scale});
    }

    // Transition circles: chi' increases strictly from -1 to 0, so each
    // integer q with q / A in (-1, 0) is hit exactly once.  Solve
    // smooth_step(t) = -q / A by bisection.
    double qlo = std::min(0.0, -A);
    double qhi = std::max(0.0, -A);
    for (int q = static_cast<int>(std::floor(qlo)); q <= static_cast<int>(std::ceil(qhi)); ++q) {
        if (q == 0) continue;
        const double target = static_cast<double>(q) / A;  // wanted value of chi'
        if (!(target > -1.0 + 1e-12 && target < -1e-12)) continue;
        const double want = -target;  // smooth_step value in (0, 1)
        double lo = 0.0, hi = 1.0;
        while (true) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            // smooth_step decreases from 1 to 0.
            if (smooth_step(mid) > want) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        const double t = 0.5 * (lo + hi);
        const double u = (1.0 - 2.0 * delta) + 2.0 * delta * t;
        out.squared_radii.push_back(u * ham.scale);
        out.congruences.push_back(q);
    }
    return out;
}

int cz_fixed_point(const RadialHamiltonian& ham, int k, double s0) {
    if (k <= 0) throw std::invalid_argument("cz_fixed_point: k must be positive");
    if (s0 == 0.0) {
        const double x = snap_integer(-static_cast<double>(k) * ham.dh(0.0) / kPi,
                                      kCongruenceTol);
        return 2 * static_cast<int>(std::ceil(x)) - 1;
    }
    const double q_real = static_cast<double>(k) * ham.dh(s0) / kPi;
    if (std::abs(q_real - std::round(q_real)) > kCongruenceTol) {
        throw std::invalid_argument("cz_fixed_point: point is not fixed by the k-th iterate");
    }
    const double p = -2.0 * q_real;
    const double p_rounded = std::round(p);
    assert(std::abs(p - p_rounded) < 1e-6);
    const int even_part = static_cast<int>(p_rounded);
    return ham.d2h(s0) < 0.0 ? even_part : even_part - 1;
}

int cz_fixed_point(const RadialHamiltonian& ham, int k, const Vec2& z0) {
    return cz_fixed_point(ham, k, z0[0] * z0[0] + z0[1] * z0[1]);
}

double mean_cz_fixed_point(const RadialHamiltonian& ham, double s0) {
    return -2.0 * ham.dh(s0) / kPi;
}

double mean_cz_fixed_point(const RadialHamiltonian& ham, const Vec2& z0) {
    return mean_cz_fixed_point(ham, z0[0] * z0[0] + z0[1] * z0[1]);
}

SymplecticPath linearized_path(const RadialHamiltonian& ham, const Vec2& z0, int k,
                               int samples_per_iterate) {
    if (k <= 0 || samples_per_iterate < 2) {
        throw std::invalid_argument("linearized_path: bad sampling request");
    }
    const int n = k * samples_per_iterate;
    SymplecticPath path;
    path.samples.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double t = static_cast<double>(i) / n;
        path.samples.push_back({t, radial_dflow(ham, z0, static_cast<double>(k) * t)});
    }
    return path;
}

}  // namespace diskflow
