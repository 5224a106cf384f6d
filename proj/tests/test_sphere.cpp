// Checks for the sphere lift: period and index bookkeeping, mean rotation
// numbers against the closed-form envelopes, the extremal invariants and
// their windows, and dynamical-convexity certification with witnesses.

#include "diskflow/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "test_harness.hpp"

namespace {

using namespace diskflow;
using testing::check;
using testing::check_eq;
using testing::check_near;
using testing::check_throws;

constexpr double kPi = 3.14159265358979323846;

const StatementCheck* find_cert(const ConvexityReport& report, const std::string& name) {
    for (const StatementCheck& c : report.certificates)
        if (c.name == name) return &c;
    return nullptr;
}

void lift_tests() {
    for (int k = 1; k <= 5; ++k) {
        const ReebOrbitClass b = lift_binding(k);
        check(b.binding, "binding flag at k = " + std::to_string(k));
        check_near(b.T, k * kPi, 0.0, "binding period k pi");
        check_eq(b.mu_s3, 4 * k - 1, "binding index 4k - 1");
        check_near(b.rho_bar, 2.0 / kPi, 0.0, "binding mean rotation 2/pi");
        const ReebOrbitClass r = reference_orbit(k);
        check_eq(r.mu_s3, b.mu_s3, "reference orbit matches the binding cover");
    }
    check_throws([] { lift_binding(0); }, "binding lift rejects k = 0");

    const SectorParams p = select_params(2, 0.5);
    check_throws([&] {
        const OrbitClass cls = enumerate_orbit_classes(p, 1).front();
        lift_class(p, cls, 0);
    }, "class lift rejects k = 0");
    for (int k = 1; k <= 12; ++k) {
        for (const OrbitClass& cls : enumerate_orbit_classes(p, k)) {
            const ReebOrbitClass r = lift_class(p, cls, k);
            const std::string tag =
                std::string(to_string(cls.kind)) + " at k = " + std::to_string(k);
            check(!r.binding, "lifted class is not the binding: " + tag);
            check_near(r.T, k * (kPi + cls.sigma), 0.0, "period k (pi + sigma): " + tag);
            check(r.T >= kPi - 1e-12, "period at least pi: " + tag);
            check_eq(r.mu_s3 - cls.mu - 4 * k, 0, "index shift + 4k exact: " + tag);
            check_near(r.rho_bar * (kPi + cls.sigma) - 2.0 - 0.5 * cls.mu_mean_per_k, 0.0, 1e-12,
                       "mean rotation identity: " + tag);
        }
    }
}

void profile_consistency_tests() {
    // Every lifted circle or region class sits on one of the two
    // closed-form rho_bar envelopes.
    for (auto [n, eps] : {std::pair<int, double>{2, 0.5}, {3, 0.25}}) {
        const SectorParams p = select_params(n, eps);
        for (int k = 1; k <= 3 * n; ++k) {
            for (const OrbitClass& cls : enumerate_orbit_classes(p, k)) {
                const ReebOrbitClass r = lift_class(p, cls, k);
                const bool pocket = cls.kind == OrbitKind::PocketCenter ||
                                    cls.kind == OrbitKind::PocketCircle ||
                                    cls.kind == OrbitKind::PocketPlateau ||
                                    cls.kind == OrbitKind::PocketBoundary;
                const double envelope = pocket
                                            ? rho_bar_profile_pocket(p, cls.squared_radius)
                                            : rho_bar_profile_ambient(p, cls.squared_radius);
                check_near(r.rho_bar, envelope, 1e-13,
                           std::string("envelope matches class rho_bar: ") + to_string(cls.kind) +
                               " n = " + std::to_string(n));
            }
        }
    }

    // The pocket center value in closed form.
    const SectorParams p = select_params(3, 0.25);
    const auto classes = enumerate_orbit_classes(p, 3);
    const auto center = std::find_if(classes.begin(), classes.end(), [](const OrbitClass& c) {
        return c.kind == OrbitKind::PocketCenter;
    });
    check(center != classes.end(), "pocket center enumerated at k = n");
    const double sigma_w0 = (kPi / 3.0) * (1.0 - p.delta) * (1.0 + p.eta * p.theta);
    check_near(center->sigma, sigma_w0, 1e-12, "pocket center action closed form");
    const double rho_w0 = (2.0 + 1.0 / 3.0 - 3.0 + p.nu()) / (kPi + sigma_w0);
    check_near(lift_class(p, *center, 3).rho_bar, rho_w0, 1e-12,
               "pocket center mean rotation closed form");
}

void tmin_volume_tests() {
    for (auto [n, eps] : {std::pair<int, double>{2, 0.5}, {3, 0.25}, {4, 0.25}}) {
        const SectorParams p = select_params(n, eps);
        const std::string tag = " for n = " + std::to_string(n);
        check_near(t_min(p), kPi, 0.0, "minimal period is pi" + tag);
        const double vol = volume(p);
        check(vol > kPi * kPi / n, "volume above pi^2/n" + tag);
        check_near(vol, kPi * kPi + calabi_phi(p), 0.0, "volume is pi^2 plus the Calabi invariant" + tag);
        const double rho = systolic_ratio(p);
        check(rho > n - eps && rho < n, "systolic ratio window" + tag);
        check_near(rho, kPi * kPi / vol, 1e-15, "systolic ratio from t_min and volume" + tag);
    }
    // Halving the volume doubles the ratio.
    check_near(kPi * kPi / (kPi * kPi / 2.0), 2.0, 0.0, "ratio 2 at half the round volume");
}

void invariants_tests() {
    for (auto [n, eps] : {std::pair<int, double>{2, 0.5}, {3, 0.25}, {4, 0.25}}) {
        const SectorParams p = select_params(n, eps);
        const std::string tag = " for n = " + std::to_string(n);
        const ContactInvariants inv = invariants_sS(p);
        const double lo = 2.0 - static_cast<double>((n - 1) * (n - 1));
        check_near(inv.S, 2.0, 1e-10, "maximal invariant is 2" + tag);
        check(inv.s > lo && inv.s < lo + eps, "minimal invariant window" + tag);
        check_near(inv.Delta, inv.S - inv.s, 0.0, "gap is the difference" + tag);
        check(inv.Delta > (n - 1) * (n - 1) - eps && inv.Delta < (n - 1) * (n - 1),
              "gap window" + tag);

        // Binding dominance and the outer floor, sampled densely over the
        // transitions where both envelopes vary.
        const double edge = 1.0 - 2.0 * p.delta;
        const double floor = (2.0 - 1.0 / (n + 1.0)) / kPi;
        int above_binding = 0;
        int below_floor = 0;
        for (int i = 0; i <= 4096; ++i) {
            const double t = static_cast<double>(i) / 4096;
            const double s_amb = edge + 2.0 * p.delta * t;
            const double amb = rho_bar_profile_ambient(p, s_amb);
            const double pk = rho_bar_profile_pocket(p, s_amb * p.pocket_scale());
            if (amb > 2.0 / kPi + 1e-12 || pk > 2.0 / kPi + 1e-12) ++above_binding;
            if (amb < floor - 1e-12) ++below_floor;
        }
        check_eq(above_binding, 0, "no envelope point exceeds 2/pi" + tag);
        check_eq(below_floor, 0, "ambient envelope stays above the outer floor" + tag);
        check(rho_bar_profile_ambient(p, 0.5 * edge) <= 2.0 / kPi + 1e-12,
              "plateau below 2/pi" + tag);
        check_near(rho_bar_profile_ambient(p, 1.25), 2.0 / kPi, 0.0,
                   "exterior attains 2/pi" + tag);

        // The enumerated classes reproduce the envelope extrema: the
        // infimum is attained on the pocket plateau region, present from
        // iterate n on.
        const ContactInvariants truncated = invariants_sS_enumerated(p, n);
        check(truncated.s >= inv.s - 1e-12, "enumerated infimum never undercuts" + tag);
        check_near(truncated.s, inv.s, 1e-9, "enumerated infimum attains the envelope" + tag);
        check_near(truncated.S, inv.S, 1e-10, "enumerated supremum attains the binding" + tag);

        // Scale invariance: action data scaled by c leaves s, S and the
        // systolic ratio unchanged.
        const double c = 2.75;
        const double t0 = t_min(p);
        const double scaled_s = (c * t0) * ((inv.s / t0) / c);
        const double scaled_S = (c * t0) * ((inv.S / t0) / c);
        const double scaled_rho = (c * t0) * (c * t0) / (c * c * volume(p));
        check_near(scaled_s, inv.s, 1e-12 * std::abs(inv.s), "s unchanged under action scaling" + tag);
        check_near(scaled_S, inv.S, 1e-12 * inv.S, "S unchanged under action scaling" + tag);
        check_near(scaled_rho, systolic_ratio(p), 1e-12 * n, "ratio unchanged under action scaling" + tag);
    }
}

void convexity_tests() {
    {
        const SectorParams p = select_params(2, 0.5);
        const ConvexityReport report = check_dynamical_convexity(p, 16);
        check(report.dynamically_convex, "n = 2 map is dynamically convex");
        check_eq(report.witness.mu_s3, 3, "minimal index 3");
        check(!report.negative_witness.has_value(), "no negative index orbit for n = 2");
        check(report.all_certified(), "all family certificates pass for n = 2");
        check_eq(static_cast<long long>(report.certificates.size()), 9,
                 "one certificate per family plus the binding");
        check(find_cert(report, "sweep cross-check") == nullptr,
              "sweep never undercuts a family floor");

        // Independent sweep of the same range.
        int swept_min = 1 << 30;
        for (int k = 1; k <= 16; ++k) {
            swept_min = std::min(swept_min, 4 * k - 1);
            for (const OrbitClass& cls : enumerate_orbit_classes(p, k))
                swept_min = std::min(swept_min, cz_class(p, cls, k) + 4 * k);
        }
        check_eq(swept_min, 3, "independent sweep minimum");
    }
    {
        const SectorParams p = select_params(3, 0.25);
        const ConvexityReport report = check_dynamical_convexity(p, 24);
        check(!report.dynamically_convex, "n = 3 map is not dynamically convex");
        check(report.negative_witness.has_value(), "negative index witness exists for n = 3");
        check_eq(report.negative_witness->mu_s3, -3, "first negative index is -3");
        check_eq(report.negative_witness->k, 3, "negative witness at iterate n");
        check(!report.negative_witness->binding &&
                  report.negative_witness->source.kind == OrbitKind::PocketCenter,
              "negative witness is the pocket center");
        const StatementCheck* center = find_cert(report, "pocket_center");
        check(center != nullptr && !center->pass, "pocket center certificate fails for n = 3");
        const StatementCheck* exterior = find_cert(report, "exterior");
        check(exterior != nullptr && exterior->pass && exterior->margin == 0.0,
              "exterior certificate attains the bound");
    }
    {
        const SectorParams p = select_params(4, 0.25);
        const ConvexityReport report = check_dynamical_convexity(p, 8);
        check(report.negative_witness.has_value() && report.negative_witness->mu_s3 == -13,
              "n = 4 negative witness index -2n^2 + 4n + 3");
    }
    check_throws([] {
        check_dynamical_convexity(select_params(2, 0.5), 0);
    }, "convexity check rejects k_max = 0");
}

void reference_tests() {
    const ContactFormReport r = reference_contact_report();
    check_near(r.t_min, kPi, 0.0, "reference minimal period pi");
    check_near(r.volume, kPi * kPi, 0.0, "reference volume pi^2");
    check_near(r.rho_sys, 1.0, 0.0, "reference systolic ratio 1");
    check_near(r.s, 2.0, 0.0, "reference s = 2");
    check_near(r.S, 2.0, 0.0, "reference S = 2");
    check_near(r.Delta, 0.0, 0.0, "reference gap 0");
    check(r.dynamically_convex, "reference form is dynamically convex");
    check_eq(r.convexity_witness.mu_s3, 3, "reference witness index 3");
    check(!r.negative_index_witness.has_value(), "reference has no negative index orbit");
    // The generic route reproduces the closed forms within rounding.
    check_near(kPi * (2.0 / kPi), 2.0, 1e-15, "t_min times the binding rotation");
}

void theorem_tests() {
    for (auto [n, eps] : {std::pair<int, double>{2, 0.5}, {3, 0.25}, {4, 0.25}}) {
        const TheoremVerification v = verify_theorems(n, eps);
        const std::string tag = " for n = " + std::to_string(n);
        check(v.map.all_pass(), "disk statements pass" + tag);
        check(v.all_pass(), "all theorem clauses pass" + tag);
        check(v.first_failure() == nullptr, "no first failure" + tag);
        check_eq(static_cast<long long>(v.clauses.size()), 6, "six clauses" + tag);
        const std::string convex_clause = n == 2 ? "dynamical convexity" : "negative index orbits";
        check(v.clauses.back().name == convex_clause, "convexity clause name" + tag);
        for (const StatementCheck& c : v.clauses) {
            check(c.margin >= 0.0, "clause margin nonnegative: " + c.name + tag);
        }
        check_near(v.contact.rho_sys, v.contact.t_min * v.contact.t_min / v.contact.volume, 0.0,
                   "report ratio consistency" + tag);
        check(v.contact.Delta >= 0.0, "gap nonnegative" + tag);
    }
    check_throws([] { verify_theorems(2, 1e-9); }, "hopeless tolerance propagates the search failure");
}

}  // namespace

int main() {
    lift_tests();
    profile_consistency_tests();
    tmin_volume_tests();
    invariants_tests();
    convexity_tests();
    reference_tests();
    theorem_tests();
    return testing::finish("test_sphere");
}
