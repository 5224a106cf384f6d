#include "diskflow/oracle.hpp"

#include <cmath>
#include <random>

#include "test_harness.hpp"

namespace {

using diskflow::CutoffProfile;
using diskflow::HamiltonianField;
using diskflow::IntegratorConfig;
using diskflow::RadialHamiltonian;
using diskflow::Vec2;

constexpr double kPi = 3.14159265358979323846;

Vec2 rotate(const Vec2& z, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * z[0] - s * z[1], s * z[0] + c * z[1]};
}

double matrix_gap(const diskflow::Sp2Matrix& m, const diskflow::Sp2Matrix& w) {
    return std::max(std::max(std::abs(m.a - w.a), std::abs(m.b - w.b)),
                    std::max(std::abs(m.c - w.c), std::abs(m.d - w.d)));
}

double matrix_mag(const diskflow::Sp2Matrix& m) {
    return std::max(std::max(std::abs(m.a), std::abs(m.b)),
                    std::max(std::abs(m.c), std::abs(m.d)));
}

void basic_examples() {
    const HamiltonianField none{[](const Vec2&) { return 0.0; },
                                [](const Vec2&) -> Vec2 { return {0.0, 0.0}; }};
    const Vec2 z{0.4, -0.2};
    const Vec2 still = diskflow::integrate_flow(none, 1.7, z);
    testing::check_eq(still[0], z[0], "zero field x");
    testing::check_eq(still[1], z[1], "zero field y");
    const diskflow::Sp2Matrix id = diskflow::fd_linearization(none, 1.0, z);
    testing::check_near(matrix_gap(id, diskflow::Sp2Matrix::identity()), 0.0, 1e-10,
                        "zero field linearization");
    testing::check_eq(diskflow::sampled_cz(none, 2, z), -1, "zero field index");
    testing::check_near(diskflow::quadrature_action(none, z), 0.0, 1e-12, "zero field action");

    const CutoffProfile profile(0.1);
    for (int n = 2; n <= 4; ++n) {
        const RadialHamiltonian hplus(kPi / n, 1.0, profile);
        const HamiltonianField field = diskflow::radial_field(hplus);
        const Vec2 inner{0.35, 0.15};
        const Vec2 got = diskflow::integrate_flow(field, 1.0, inner);
        const Vec2 want = rotate(inner, 2.0 * kPi / n);
        testing::check_near(got[0], want[0], 1e-9, "integrated inner rotation x");
        testing::check_near(got[1], want[1], 1e-9, "integrated inner rotation y");

        // Linearization at the origin is the plain rotation matrix.
        const diskflow::Sp2Matrix m = diskflow::fd_linearization(field, 0.6, {0.0, 0.0});
        const diskflow::Sp2Matrix r = diskflow::Sp2Matrix::rotation(-2.0 * hplus.dh(0.0) * 0.6);
        testing::check_near(matrix_gap(m, r), 0.0, 1e-8, "origin linearization");

        testing::check_near(diskflow::quadrature_action(field, inner),
                            (kPi / n) * 0.9, 1e-8, "integrated plateau action");
    }

    const double theta = -1.7, r2 = 0.5;
    const RadialHamiltonian hk(kPi * r2 * theta, r2, profile);
    const HamiltonianField kfield = diskflow::radial_field(hk);
    const Vec2 small{0.15, -0.1};
    const Vec2 got = diskflow::integrate_flow(kfield, 1.0, small);
    const Vec2 want = rotate(small, 2.0 * kPi * theta);
    testing::check_near(got[0], want[0], 1e-9, "integrated pocket rotation x");
    testing::check_near(got[1], want[1], 1e-9, "integrated pocket rotation y");

    testing::check_throws([&] { diskflow::integrate_flow(kfield, 1.0, small, {0.0, 4, 1e-9}); },
                          "bad step size rejected");
    testing::check_throws([&] { diskflow::integrate_flow(kfield, 1.0, small, {1e-3, 2, 1e-9}); },
                          "unsupported order rejected");
}

void randomized_agreement() {
    std::mt19937 rng(9101u);
    std::uniform_real_distribution<double> amp_dist(-5.0, 5.0);
    std::uniform_real_distribution<double> scale_dist(0.3, 1.0);
    std::uniform_real_distribution<double> delta_dist(0.05, 0.35);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int trial = 0; trial < 100; ++trial) {
        const double scale = scale_dist(rng);
        const RadialHamiltonian ham(amp_dist(rng), scale, CutoffProfile(delta_dist(rng)));
        const HamiltonianField field = diskflow::radial_field(ham);

        const double radius = std::sqrt(1.3 * scale) * unit(rng);
        const double phase = 2.0 * kPi * unit(rng);
        const Vec2 z{radius * std::cos(phase), radius * std::sin(phase)};

        const Vec2 closed = diskflow::radial_flow(ham, z, 1.0);
        const Vec2 numeric = diskflow::integrate_flow(field, 1.0, z);
        testing::check_near(numeric[0], closed[0], 1e-9, "flow agreement x");
        testing::check_near(numeric[1], closed[1], 1e-9, "flow agreement y");

        testing::check_near(ham.value(numeric), ham.value(z), 1e-9, "energy conservation");

        const double t = 0.3 + 0.7 * unit(rng);
        const diskflow::Sp2Matrix fd = diskflow::fd_linearization(field, t, z);
        const diskflow::Sp2Matrix exact = diskflow::radial_dflow(ham, z, t);
        testing::check(matrix_gap(fd, exact) <= 1e-5 * std::max(1.0, matrix_mag(exact)),
                       "linearization agreement");
        testing::check(std::abs(fd.det() - 1.0) <= 1e-6, "linearization determinant");

        testing::check_near(diskflow::quadrature_action(field, z), diskflow::radial_action(ham, z),
                            1e-8, "action agreement");
    }
}

// Sampled indices must reproduce the closed form on both curvature branches
// and at the origin.
void sampled_index_agreement() {
    const CutoffProfile profile(0.15);

    // Origin of the inner twist, several iterates.
    for (int n = 2; n <= 4; ++n) {
        const RadialHamiltonian hplus(kPi / n, 1.0, profile);
        const HamiltonianField field = diskflow::radial_field(hplus);
        for (int k = 1; k <= 3; ++k) {
            const int closed = diskflow::cz_fixed_point(hplus, k, {0.0, 0.0});
            testing::check_eq(closed, 2 * static_cast<int>(std::ceil(double(k) / n)) - 1,
                              "origin closed form");
            testing::check_eq(diskflow::sampled_cz(field, k, {0.0, 0.0}), closed,
                              "origin sampled index");
        }
    }

    // Convex-side circle of the half twist (positive curvature branch).
    {
        const RadialHamiltonian h2(kPi / 2, 1.0, profile);
        const HamiltonianField field = diskflow::radial_field(h2);
        const auto fixed = diskflow::fixed_point_radii(h2, 3);
        testing::check_eq(static_cast<int>(fixed.squared_radii.size()), 1, "one circle");
        for (double s : fixed.squared_radii) {
            const Vec2 z{std::sqrt(s), 0.0};
            const int closed = diskflow::cz_fixed_point(h2, 3, z);
            testing::check_eq(closed, 1, "circle closed form (convex)");
            testing::check_eq(diskflow::sampled_cz(field, 3, z), closed,
                              "circle sampled index (convex)");
        }
    }

    // Pocket-model profile: plateau (flat branch) and concave-side circles.
    {
        const double theta = -1.5, r2 = 0.5;
        const RadialHamiltonian hk(kPi * r2 * theta, r2, profile);
        const HamiltonianField field = diskflow::radial_field(hk);
        const int k = 2;

        const Vec2 plateau{0.4, 0.0};
        const int closed_plateau = diskflow::cz_fixed_point(hk, k, plateau);
        testing::check_eq(closed_plateau, 2 * static_cast<int>(std::lround(k * theta)) - 1,
                          "plateau closed form");
        testing::check_eq(diskflow::sampled_cz(field, k, plateau), closed_plateau,
                          "plateau sampled index");

        const auto fixed = diskflow::fixed_point_radii(hk, k);
        testing::check_eq(static_cast<int>(fixed.squared_radii.size()), 2, "two pocket circles");
        for (double s : fixed.squared_radii) {
            const Vec2 z{std::sqrt(s), 0.0};
            const int closed = diskflow::cz_fixed_point(hk, k, z);
            testing::check(closed % 2 == 0, "pocket circle index even");
            testing::check_eq(diskflow::sampled_cz(field, k, z), closed,
                              "circle sampled index (concave)");
        }

        testing::check_throws([&] { diskflow::sampled_cz(field, 1, {0.4, 0.0}); },
                              "non-periodic point rejected");
    }
}

void return_time_tests() {
    const IntegratorConfig cfg{1e-4, 4, 1e-9};

    const RadialHamiltonian none = RadialHamiltonian::zero();
    testing::check_near(diskflow::return_time_check(none, {0.3, 0.2}, cfg), kPi, 1e-9,
                        "trivial return time");

    const double delta = 0.1;
    const RadialHamiltonian hplus(kPi / 3, 1.0, CutoffProfile(delta));
    testing::check_near(diskflow::return_time_check(hplus, {0.3, 0.0}, cfg),
                        kPi + (kPi / 3) * (1.0 - delta), 1e-7, "plateau return time");
    testing::check_near(diskflow::return_time_check(hplus, {1.2, 0.0}, cfg), kPi, 1e-9,
                        "exterior return time");

    for (int i = 0; i < 20; ++i) {
        const double r = 1.25 * i / 19.0;
        const Vec2 z{r, 0.0};
        const double measured = diskflow::return_time_check(hplus, z, cfg);
        testing::check_near(measured, diskflow::radial_action(hplus, z) + kPi, 1e-6,
                            "return time sweep");
    }
}

}  // namespace

int main() {
    basic_examples();
    randomized_agreement();
    sampled_index_agreement();
    return_time_tests();
    return testing::finish("test_oracle");
}
