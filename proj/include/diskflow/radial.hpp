#pragma once

#include <array>
#include <optional>
#include <vector>

#include "diskflow/cutoff.hpp"
#include "diskflow/sp2.hpp"

// Autonomous radial Hamiltonians H(z) = h(|z|^2) with h built from the
// cutoff profile, h(s) = amplitude * chi_delta(s / scale).  Everything about
// their dynamics is available in closed form:
//
//   flow        phi^t(z) = e^{-2 h'(|z|^2) i t} z        (circles preserved)
//   linearized  Dphi^t(z0) u = e^{-2h' i t} (u - 4 h'' <z0,u> i t z0)
//   action      sigma(z) = h(s) - s h'(s) at s = |z|^2
//   Calabi      CAL = 4 pi * integral_0^inf r h(r^2) dr
//
// z0 != 0 is fixed by the k-th iterate exactly when k h'(|z0|^2) / pi is an
// integer, and the index of that fixed point is
//
//   -2 k h'(s0) / pi            when h''(s0) < 0
//   -2 k h'(s0) / pi - 1        when h''(s0) >= 0
//   2 ceil(-k h'(0) / pi) - 1   at the origin.
//
// The sign convention: the rotation interval of the linearized path has the
// integer m = -k h'/pi as an endpoint, and the radial direction overshoots
// it exactly when h'' < 0.

namespace diskflow {

struct RadialHamiltonian {
    double amplitude;
    double scale;  // support is |z|^2 < scale
    CutoffProfile cutoff;

    RadialHamiltonian(double amplitude_, double scale_, const CutoffProfile& cutoff_);
    static RadialHamiltonian zero();

    bool is_zero() const { return amplitude == 0.0; }
    double h(double s) const;
    double dh(double s) const;
    double d2h(double s) const;
    double value(const Vec2& z) const { return h(z[0] * z[0] + z[1] * z[1]); }
};

Vec2 radial_flow(const RadialHamiltonian& ham, const Vec2& z, double t);
Sp2Matrix radial_dflow(const RadialHamiltonian& ham, const Vec2& z0, double t);
double radial_action(const RadialHamiltonian& ham, const Vec2& z);

// Calabi invariant by adaptive quadrature to absolute tolerance 1e-10.
double calabi(const RadialHamiltonian& ham);

// Where the k-th iterate fixes whole circles: all s >= 0 with
// k h'(s) / pi an integer, in squared-radius units.  Isolated roots lie on
// the strictly convex transition piece and are resolved by bisection to
// 1e-12; plateaus of h' (the inner disk when its slope matches, and the
// exterior where h' = 0) come back as closed intervals, the exterior one
// with +infinity as its upper end.
struct FixedPointSet {
    std::vector<double> squared_radii;
    // For each transition circle, the exact integer k h'(s) / pi it solves.
    // The double in squared_radii cannot encode the circle to better than
    // curvature times one ulp, so downstream index formulas should use this
    // integer rather than re-deriving it from the radius.
    std::vector<int> congruences;
    std::vector<std::pair<double, double>> squared_intervals;
};
FixedPointSet fixed_point_radii(const RadialHamiltonian& ham, int k);

// Closed-form index of a fixed point of the k-th iterate.  Throws
// std::invalid_argument when z0 fails the fixed-point congruence
// (tolerance 1e-9); the integer -2 k h'/pi is obtained by rounding with
// deviation below 1e-6 asserted.  The overloads taking the squared radius
// directly skip the square-root round trip of building a point.
int cz_fixed_point(const RadialHamiltonian& ham, int k, const Vec2& z0);
int cz_fixed_point(const RadialHamiltonian& ham, int k, double squared_radius);

// Mean index per iterate of the orbit through z0: -2 h'(|z0|^2) / pi.
double mean_cz_fixed_point(const RadialHamiltonian& ham, const Vec2& z0);
double mean_cz_fixed_point(const RadialHamiltonian& ham, double squared_radius);

// Sampled path t -> Dphi^{k t}(z0) for cross-checks against the sampled
// index machinery.
SymplecticPath linearized_path(const RadialHamiltonian& ham, const Vec2& z0, int k,
                               int samples_per_iterate = 256);

}  // namespace diskflow
