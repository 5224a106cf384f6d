#pragma once

#include <functional>

#include "diskflow/radial.hpp"
#include "diskflow/sp2.hpp"

// Brute-force verification layer.  Nothing here knows the closed-form
// answers: flows are integrated with a fixed-step fourth-order explicit
// scheme, linearizations come from central finite differences of the
// integrated flow, indices from the sampled-path machinery, and actions
// from composite quadrature along the trajectory.  These routines provide
// the independent route that the exact formulas elsewhere are tested
// against.

namespace diskflow {

struct IntegratorConfig {
    double step_size = 2.5e-5;
    int order = 4;  // the only supported explicit order
    double energy_tolerance = 1e-9;
};

// A Hamiltonian presented as evaluators only.  The induced vector field is
// (dH/dy, -dH/dx), matching the area form dx ^ dy.
struct HamiltonianField {
    std::function<double(const Vec2&)> value;
    std::function<Vec2(const Vec2&)> gradient;
};

HamiltonianField radial_field(const RadialHamiltonian& ham);

Vec2 integrate_flow(const HamiltonianField& field, double t, const Vec2& z,
                    const IntegratorConfig& cfg = {});

// Central differences of integrate_flow with step 1e-5, falling back to a
// Richardson combination when the determinant drifts beyond 1e-6.
Sp2Matrix fd_linearization(const HamiltonianField& field, double t, const Vec2& z0,
                           const IntegratorConfig& cfg = {});

// Index of the k-th iterate at a periodic point, computed purely from
// integrated data: finite-difference linearizations at 2^8 k samples,
// doubled on sampling-adequacy failures up to 2^12 k.  The point must be
// periodic within 1e-7.
int sampled_cz(const HamiltonianField& field, int k, const Vec2& z0,
               const IntegratorConfig& cfg = {});

// Action of the time-1 map at z with respect to the standard radial
// primitive, via quadrature along the integrated trajectory.
double quadrature_action(const HamiltonianField& field, const Vec2& z,
                         const IntegratorConfig& cfg = {});

// Mapping-torus model: drive the disk coordinate by the rescaled field over
// one suspension lap and accumulate the reparametrized time.  Returns the
// measured first-return time and throws a diagnostic error unless it agrees
// with action + pi to 1e-6.
double return_time_check(const RadialHamiltonian& ham, const Vec2& z,
                         const IntegratorConfig& cfg = {});

}  // namespace diskflow
