#include "diskflow/sp2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace diskflow {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double dist_to_integers(double x) { return std::fabs(x - std::round(x)); }

}  // namespace

Sp2Matrix Sp2Matrix::rotation(double t) {
    const double c = std::cos(t), s = std::sin(t);
    return {c, -s, s, c};
}

Sp2Matrix Sp2Matrix::exp_traceless(double p, double q, double r, double t) {
    // exp(t * A) for A = [[p, q], [r, -p]].  A^2 = -det(A) * I, so the
    // exponential is cos/sin, cosh/sinh or affine depending on det's sign.
    const double det = -p * p - q * r;
    double c, s;  // exp(tA) = c * I + s * A
    if (det > 0.0) {
        const double w = std::sqrt(det);
        c = std::cos(w * t);
        s = (w > 0.0) ? std::sin(w * t) / w : t;
    } else if (det < 0.0) {
        const double w = std::sqrt(-det);
        c = std::cosh(w * t);
        s = std::sinh(w * t) / w;
    } else {
        c = 1.0;
        s = t;
    }
    return {c + s * p, s * q, s * r, c - s * p};
}

void SymplecticPath::validate() const {
    if (samples.size() < 2)
        throw std::invalid_argument("SymplecticPath: need at least two samples");
    if (std::fabs(samples.front().t) > 1e-12 || std::fabs(samples.back().t - 1.0) > 1e-12)
        throw std::invalid_argument("SymplecticPath: parameter must run from 0 to 1");
    const Sp2Matrix& m0 = samples.front().m;
    if (std::fabs(m0.a - 1.0) + std::fabs(m0.b) + std::fabs(m0.c) + std::fabs(m0.d - 1.0) > 1e-9)
        throw std::invalid_argument("SymplecticPath: path must start at the identity");
    double prev = samples.front().t;
    for (size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i].t > prev))
            throw std::invalid_argument("SymplecticPath: parameter samples must be strictly increasing");
        prev = samples[i].t;
    }
    for (const PathSample& s : samples) {
        if (std::fabs(s.m.det() - 1.0) > 1e-10)
            throw std::invalid_argument("SymplecticPath: determinant deviates from 1 by more than 1e-10");
    }
}

int interval_index(const IndexInterval& interval) {
    const double lo = interval.lo, hi = interval.hi;
    if (!(hi >= lo))
        throw std::invalid_argument("interval_index: empty interval");
    if (!(hi - lo < 1.0))
        throw std::invalid_argument("interval_index: interval must have length < 1");

    // Shift left by half the smallest positive distance from an endpoint to
    // the integers; when both endpoints are integers any small shift gives
    // the same answer and 1/4 is used.
    const double dlo = dist_to_integers(lo);
    const double dhi = dist_to_integers(hi);
    double delta = 0.25;
    if (dlo > 0.0 && dhi > 0.0)
        delta = 0.5 * std::min(dlo, dhi);
    else if (dlo > 0.0)
        delta = 0.5 * dlo;
    else if (dhi > 0.0)
        delta = 0.5 * dhi;

    const double slo = lo - delta, shi = hi - delta;
    const double k = std::ceil(slo);
    if (k <= shi)
        return 2 * static_cast<int>(k);             // shifted interval meets the integers in {k}
    return 2 * static_cast<int>(std::ceil(shi)) - 1;  // contained in (ceil-1, ceil)
}

double winding(const SymplecticPath& path, const Vec2& u) {
    path.validate();
    if (u[0] == 0.0 && u[1] == 0.0)
        throw std::invalid_argument("winding: direction must be nonzero");
    double total = 0.0;
    Vec2 prev = path.samples.front().m.apply(u);
    for (size_t i = 1; i < path.samples.size(); ++i) {
        const Vec2 cur = path.samples[i].m.apply(u);
        const double cross = prev[0] * cur[1] - prev[1] * cur[0];
        const double dot = prev[0] * cur[0] + prev[1] * cur[1];
        const double step = std::atan2(cross, dot);
        if (std::fabs(step) >= 0.5 * kPi)
            throw std::runtime_error(
                "winding: direction rotates by >= pi/2 between samples; refine the path");
        total += step;
        prev = cur;
    }
    return total / kTwoPi;
}

namespace {

// Locally refines an extremum of angle -> winding over direction space
// (periodic with period pi).  window is centered on the current best angle.
double refine_extremum(const SymplecticPath& path, double best_angle, double window,
                       bool maximize, double refine_tol, double* angle_out) {
    auto value = [&](double ang) {
        const double w = winding(path, Vec2{std::cos(ang), std::sin(ang)});
        return maximize ? w : -w;
    };
    double best = value(best_angle);
    // Shrink the bracketing window to a floor rather than stopping on value
    // stagnation: at a conical extremum (exact tangent direction of a shear)
    // the value error scales linearly with the direction error, and
    // stagnation-based stops would leave it above the endpoint tolerance.
    // The extra 1e-4 covers cone slopes up to 1e4.
    const double window_floor = refine_tol * 1e-4;
    for (int round = 0; round < 80 && window > window_floor; ++round) {
        const int m = 8;
        double local_angle = best_angle;
        for (int j = -m; j <= m; ++j) {
            const double ang = best_angle + window * j / m;
            const double v = value(ang);
            if (v > best) {
                best = v;
                local_angle = ang;
            }
        }
        best_angle = local_angle;
        window /= m;
    }
    if (angle_out) *angle_out = best_angle;
    return maximize ? best : -best;
}

}  // namespace

IndexInterval rotation_interval(const SymplecticPath& path, int n_dirs,
                                double refine_tol, double snap_tol) {
    if (n_dirs < 8)
        throw std::invalid_argument("rotation_interval: need at least 8 directions");
    path.validate();

    double lo = 0.0, hi = 0.0, lo_angle = 0.0, hi_angle = 0.0;
    for (int i = 0; i < n_dirs; ++i) {
        const double ang = kPi * i / n_dirs;
        const double w = winding(path, Vec2{std::cos(ang), std::sin(ang)});
        if (i == 0 || w < lo) { lo = w; lo_angle = ang; }
        if (i == 0 || w > hi) { hi = w; hi_angle = ang; }
    }
    const double coarse_step = kPi / n_dirs;
    lo = refine_extremum(path, lo_angle, coarse_step, false, refine_tol, nullptr);
    hi = refine_extremum(path, hi_angle, coarse_step, true, refine_tol, nullptr);

    if (dist_to_integers(lo) < snap_tol) lo = std::round(lo);
    if (dist_to_integers(hi) < snap_tol) hi = std::round(hi);
    if (lo > hi) std::swap(lo, hi);

    if (hi - lo >= 0.5)
        throw std::runtime_error(
            "rotation_interval: width >= 1/2, which cannot happen for a genuine Sp(2) path");
    return {lo, hi};
}

int cz_index(const SymplecticPath& path, int n_dirs) {
    return interval_index(rotation_interval(path, n_dirs));
}

int maslov_of_loop(const SymplecticPath& loop) {
    loop.validate();
    const Sp2Matrix& last = loop.samples.back().m;
    const double gap = std::fabs(last.a - 1.0) + std::fabs(last.b) +
                       std::fabs(last.c) + std::fabs(last.d - 1.0);
    if (gap > 1e-8)
        throw std::invalid_argument("maslov_of_loop: path is not closed (M(1) != identity)");

    const double w1 = winding(loop, Vec2{1.0, 0.0});
    const double w2 = winding(loop, Vec2{0.0, 1.0});
    if (dist_to_integers(w1) > 1e-6 || dist_to_integers(w2) > 1e-6)
        throw std::runtime_error("maslov_of_loop: winding of a loop must be an integer");
    const int m1 = static_cast<int>(std::lround(w1));
    const int m2 = static_cast<int>(std::lround(w2));
    if (m1 != m2)
        throw std::runtime_error("maslov_of_loop: probe directions disagree; refine the loop");
    return m1;
}

MeanIndexResult mean_index(const std::function<SymplecticPath(int)>& family, int k_max) {
    if (k_max < 8)
        throw std::invalid_argument("mean_index: k_max must be at least 8");
    k_max = ((k_max + 7) / 8) * 8;

    double est[4];
    for (int i = 0; i < 4; ++i) {
        const int k = k_max >> (3 - i);
        est[i] = static_cast<double>(cz_index(family(k))) / k;
    }
    // Richardson step on consecutive doublings removes the O(1/k) part of
    // cz_index(k)/k coming from the bounded defect of the index sequence.
    double extrap[3];
    for (int i = 0; i < 3; ++i) extrap[i] = 2.0 * est[i + 1] - est[i];

    MeanIndexResult r;
    r.value = (extrap[0] + extrap[1] + extrap[2]) / 3.0;
    r.error_estimate = std::fabs(extrap[2] - extrap[1]);
    if (r.error_estimate > 0.1)
        throw std::runtime_error("mean_index: extrapolation did not settle (estimate > 0.1)");
    return r;
}

}  // namespace diskflow
