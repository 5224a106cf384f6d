#include "diskflow/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace diskflow {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kFdEps = 1e-5;

Vec2 field_at(const HamiltonianField& field, const Vec2& z) {
    const Vec2 g = field.gradient(z);
    return {g[1], -g[0]};
}

void rk4_step(const HamiltonianField& field, Vec2& z, double dt) {
    const Vec2 k1 = field_at(field, z);
    const Vec2 k2 = field_at(field, {z[0] + 0.5 * dt * k1[0], z[1] + 0.5 * dt * k1[1]});
    const Vec2 k3 = field_at(field, {z[0] + 0.5 * dt * k2[0], z[1] + 0.5 * dt * k2[1]});
    const Vec2 k4 = field_at(field, {z[0] + dt * k3[0], z[1] + dt * k3[1]});
    z[0] += dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    z[1] += dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
}

void require_config(const IntegratorConfig& cfg) {
    if (!(cfg.step_size > 0.0) || !std::isfinite(cfg.step_size)) {
        throw std::invalid_argument("IntegratorConfig: step size must be positive");
    }
    if (cfg.order != 4) {
        throw std::invalid_argument("IntegratorConfig: only the fourth-order scheme exists");
    }
}

Sp2Matrix normalized(const Sp2Matrix& m) {
    const double root = std::sqrt(m.det());
    return {m.a / root, m.b / root, m.c / root, m.d / root};
}

// Central difference columns from four perturbed states.
Sp2Matrix fd_from_states(const Vec2& xp, const Vec2& xm, const Vec2& yp, const Vec2& ym) {
    return {(xp[0] - xm[0]) / (2.0 * kFdEps), (yp[0] - ym[0]) / (2.0 * kFdEps),
            (xp[1] - xm[1]) / (2.0 * kFdEps), (yp[1] - ym[1]) / (2.0 * kFdEps)};
}

}  // namespace

HamiltonianField radial_field(const RadialHamiltonian& ham) {
    HamiltonianField field;
    field.value = [ham](const Vec2& z) { return ham.value(z); };
    field.gradient = [ham](const Vec2& z) -> Vec2 {
        const double dh = ham.dh(z[0] * z[0] + z[1] * z[1]);
        return {2.0 * dh * z[0], 2.0 * dh * z[1]};
    };
    return field;
}

Vec2 integrate_flow(const HamiltonianField& field, double t, const Vec2& z,
                    const IntegratorConfig& cfg) {
    require_config(cfg);
    if (t == 0.0) return z;
    const int steps = static_cast<int>(std::ceil(std::abs(t) / cfg.step_size));
    if (steps <= 0) throw std::underflow_error("integrate_flow: step size underflow");
    const double dt = t / steps;
    Vec2 state = z;
    for (int i = 0; i < steps; ++i) rk4_step(field, state, dt);
    return state;
}

Sp2Matrix fd_linearization(const HamiltonianField& field, double t, const Vec2& z0,
                           const IntegratorConfig& cfg) {
    const auto at_eps = [&](double eps) {
        const Vec2 xp = integrate_flow(field, t, {z0[0] + eps, z0[1]}, cfg);
        const Vec2 xm = integrate_flow(field, t, {z0[0] - eps, z0[1]}, cfg);
        const Vec2 yp = integrate_flow(field, t, {z0[0], z0[1] + eps}, cfg);
        const Vec2 ym = integrate_flow(field, t, {z0[0], z0[1] - eps}, cfg);
        return Sp2Matrix{(xp[0] - xm[0]) / (2.0 * eps), (yp[0] - ym[0]) / (2.0 * eps),
                         (xp[1] - xm[1]) / (2.0 * eps), (yp[1] - ym[1]) / (2.0 * eps)};
    };
    Sp2Matrix m = at_eps(kFdEps);
    if (std::abs(m.det() - 1.0) > 1e-6) {
        const Sp2Matrix half = at_eps(0.5 * kFdEps);
        m = {(4.0 * half.a - m.a) / 3.0, (4.0 * half.b - m.b) / 3.0,
             (4.0 * half.c - m.c) / 3.0, (4.0 * half.d - m.d) / 3.0};
        if (std::abs(m.det() - 1.0) > 1e-6) {
            throw std::runtime_error("fd_linearization: determinant drift beyond 1e-6");
        }
    }
    return m;
}

int sampled_cz(const HamiltonianField& field, int k, const Vec2& z0,
               const IntegratorConfig& cfg) {
    require_config(cfg);
    if (k <= 0) throw std::invalid_argument("sampled_cz: k must be positive");
    const Vec2 around = integrate_flow(field, static_cast<double>(k), z0, cfg);
    const double gap = std::hypot(around[0] - z0[0], around[1] - z0[1]);
    if (gap > 1e-7) {
        throw std::invalid_argument("sampled_cz: point is not periodic (gap " +
                                    std::to_string(gap) + ")");
    }

    for (int log2n = 8; log2n <= 12; ++log2n) {
        const int n_samples = (1 << log2n) * k;
        // March the four perturbed trajectories once, recording each sample.
        const int sub = std::max(1, static_cast<int>(std::ceil(
                            static_cast<double>(k) / (static_cast<double>(n_samples) * cfg.step_size))));
        const double dt = static_cast<double>(k) / (static_cast<double>(n_samples) * sub);
        std::array<Vec2, 4> state = {Vec2{z0[0] + kFdEps, z0[1]}, Vec2{z0[0] - kFdEps, z0[1]},
                                     Vec2{z0[0], z0[1] + kFdEps}, Vec2{z0[0], z0[1] - kFdEps}};
        SymplecticPath path;
        path.samples.reserve(n_samples + 1);
        path.samples.push_back({0.0, Sp2Matrix::identity()});
        for (int i = 1; i <= n_samples; ++i) {
            for (auto& s : state) {
                for (int j = 0; j < sub; ++j) rk4_step(field, s, dt);
            }
            path.samples.push_back({static_cast<double>(i) / n_samples,
                                    normalized(fd_from_states(state[0], state[1], state[2], state[3]))});
        }
        try {
            // Endpoint snapping at 1e-6: finite differences of integrated
            // trajectories carry more noise than exact sampled paths, and
            // degenerate orbits put an interval endpoint exactly on an
            // integer.  Genuine endpoint gaps in the verified families sit
            // orders of magnitude above this.
            return interval_index(rotation_interval(path, 64, 1e-9, 1e-6));
        } catch (const std::runtime_error&) {
            if (log2n == 12) throw;
        }
    }
    throw std::runtime_error("sampled_cz: unreachable");
}

double quadrature_action(const HamiltonianField& field, const Vec2& z,
                         const IntegratorConfig& cfg) {
    require_config(cfg);
    int steps = static_cast<int>(std::ceil(1.0 / cfg.step_size));
    if (steps % 2) ++steps;
    const double dt = 1.0 / steps;
    Vec2 state = z;
    double acc = 0.0;
    for (int i = 0; i <= steps; ++i) {
        const Vec2 v = field_at(field, state);
        const double integrand = 0.5 * (state[0] * v[1] - state[1] * v[0]) + field.value(state);
        const double weight = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        acc += weight * integrand;
        if (i < steps) rk4_step(field, state, dt);
    }
    return acc * dt / 3.0;
}

double return_time_check(const RadialHamiltonian& ham, const Vec2& z,
                         const IntegratorConfig& cfg) {
    require_config(cfg);
    const HamiltonianField field = radial_field(ham);
    // One suspension lap: the disk coordinate obeys dz/ds = X_H / pi over
    // s in [0, pi], and the flow time accumulates
    // lambda0(dz/ds) + H(z)/pi + 1 per unit s.
    int steps = static_cast<int>(std::ceil(kPi / cfg.step_size));
    if (steps % 2) ++steps;
    const double ds = kPi / steps;
    const double escape = 4.0 * (1.0 + std::hypot(z[0], z[1]) + std::sqrt(ham.scale));
    const HamiltonianField scaled{
        [&field](const Vec2& w) { return field.value(w); },
        [&field](const Vec2& w) -> Vec2 {
            const Vec2 g = field.gradient(w);
            return {g[0] / kPi, g[1] / kPi};
        }};
    Vec2 state = z;
    double acc = 0.0;
    for (int i = 0; i <= steps; ++i) {
        const Vec2 raw = field_at(field, state);
        const Vec2 v = {raw[0] / kPi, raw[1] / kPi};
        const double integrand =
            0.5 * (state[0] * v[1] - state[1] * v[0]) + field.value(state) / kPi + 1.0;
        const double weight = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        acc += weight * integrand;
        if (i < steps) rk4_step(scaled, state, ds);
        if (std::hypot(state[0], state[1]) > escape) {
            throw std::runtime_error("return_time_check: trajectory escaped the model region");
        }
    }
    const double measured = acc * ds / 3.0;
    const double expected = radial_action(ham, z) + kPi;
    if (std::abs(measured - expected) >= 1e-6) {
        throw std::runtime_error("return_time_check: residual " +
                                 std::to_string(measured - expected) + " beyond 1e-6");
    }
    return measured;
}

}  // namespace diskflow
