#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

// Conley-Zehnder style index machinery for paths in Sp(2).
//
// A path of symplectic matrices starting at the identity rotates every
// nonzero direction by some winding angle.  The set of winding numbers over
// all directions is an interval of length < 1/2 (the rotation interval), and
// the index of the path is an integer read off from how that interval sits
// relative to the integers:
//
//   mu(I) = 2k    if I meets the integers exactly in {k}
//   mu(I) = 2k+1  if I is contained in the open interval (k, k+1)
//
// extended to arbitrary intervals by shifting slightly to the left,
// mu(I) = lim mu(I - d) as d -> 0+.  In particular a single point {a} gets
// mu = 2*ceil(a) - 1 when a is not an integer, and mu = 2a - 1 when it is.
//
// This module works on sampled paths and is the independent numerical route
// against which all closed-form index formulas elsewhere are tested.

namespace diskflow {

using Vec2 = std::array<double, 2>;

// Real 2x2 matrix [[a, b], [c, d]] with determinant 1.
struct Sp2Matrix {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static Sp2Matrix identity() { return {}; }
    // Compensated a*d - b*c; plain evaluation loses the cancellation at
    // entry magnitudes beyond ~1e3 and would report false determinant drift.
    double det() const {
        const double w = b * c;
        const double err = std::fma(-b, c, w);
        return std::fma(a, d, -w) + err;
    }
    Vec2 apply(const Vec2& u) const { return {a * u[0] + b * u[1], c * u[0] + d * u[1]}; }
    Sp2Matrix operator*(const Sp2Matrix& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Sp2Matrix inverse() const { return {d, -b, -c, a}; }

    // Rotation by angle t.
    static Sp2Matrix rotation(double t);
    // Exponential of a traceless 2x2 matrix (closed form), always in Sp(2).
    static Sp2Matrix exp_traceless(double p, double q, double r, double t);
};

struct PathSample {
    double t;
    Sp2Matrix m;
};

// Sampled path t -> M(t), t increasing from 0 to 1, M(0) = identity.
// Samples must be dense enough that no direction rotates by pi/2 or more
// between consecutive samples (checked by winding()).
struct SymplecticPath {
    std::vector<PathSample> samples;

    // Throws std::invalid_argument when the sample data breaks the
    // parametrization or determinant invariants (det tolerance 1e-10).
    void validate() const;
};

// Closed interval [lo, hi] of winding numbers, in units of full turns.
struct IndexInterval {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
};

// Index of an interval of length < 1 under the left-shift convention above.
// The shift amount is half the smallest positive distance from an endpoint
// to the integers (1/4 when both endpoints are integers), which realizes the
// limit exactly.  Throws std::invalid_argument when hi - lo >= 1 or hi < lo.
int interval_index(const IndexInterval& interval);

// Winding number (in full turns) of the direction u under the path setting
// theta(t) = arg(M(t) u), accumulated without wrapping.  Throws
// std::runtime_error when consecutive samples rotate u by pi/2 or more
// (the path needs refinement), std::invalid_argument for invalid input.
double winding(const SymplecticPath& path, const Vec2& u);

// Rotation interval of the path: the range of winding(path, u) over all
// directions u.  Sampled over n_dirs directions equispaced on a half circle
// (winding is invariant under u -> -u) and refined adaptively around both
// extrema until they move by less than refine_tol per refinement round.
// Endpoint values within snap_tol of an integer are snapped onto it, so that
// downstream integer tests see exact endpoints.  The interval always has
// width < 1/2 for genuine Sp(2) paths; a wider result throws.
IndexInterval rotation_interval(const SymplecticPath& path, int n_dirs = 64,
                                double refine_tol = 1e-9, double snap_tol = 1e-9);

// Index of the path: interval_index of its rotation interval.
int cz_index(const SymplecticPath& path, int n_dirs = 64);

// Winding of a closed loop (M(1) = M(0) = identity within 1e-8); an integer,
// independent of the direction used.  Throws std::invalid_argument when the
// path is not closed, std::runtime_error when two probe directions disagree.
int maslov_of_loop(const SymplecticPath& loop);

struct MeanIndexResult {
    double value;
    double error_estimate;
};

// Mean index per iterate: the limit of cz_index(family(k)) / k.  family(k)
// must produce the path of the k-th iterate parametrized over [0, 1].
// Evaluates at the four doublings k_max/8, k_max/4, k_max/2, k_max, applies
// Richardson extrapolation to consecutive pairs and averages; the error
// estimate is the difference of the last two extrapolants.  Throws
// std::runtime_error when the sequence fails to settle (estimate > 0.1).
MeanIndexResult mean_index(const std::function<SymplecticPath(int)>& family,
                           int k_max = 64);

}  // namespace diskflow
