#include "diskflow/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace diskflow {
namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::string orbit_label(const ReebOrbitClass& r) {
    if (r.binding) return "binding, k = " + std::to_string(r.k);
    return std::string(to_string(r.source.kind)) + ", k = " + std::to_string(r.k);
}

// Golden-section search on [a, b]; assumes the bracket holds one local
// extremum.  The bracket shrinks to machine width, leaving the value
// resolved far below the 1e-10 the invariants are quoted at.
double golden_section(const std::function<double(double)>& g, double a, double b, bool want_max) {
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = g(c), fd = g(d);
    while (b - a > 1e-14) {
        const bool keep_left = want_max ? fc > fd : fc < fd;
        if (keep_left) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = g(d);
        }
    }
    return 0.5 * (a + b);
}

struct EnvelopeExtrema {
    double min_value = std::numeric_limits<double>::infinity();
    double min_arg = 0.0;
    double max_value = -std::numeric_limits<double>::infinity();
    double max_arg = 0.0;
};

// Extremizes fn over one radius envelope: the inner plateau (where fn is
// constant), the transition sampled uniformly in its own parameter with
// interior extrema polished by golden section, and optionally the
// exterior region.
EnvelopeExtrema extremize_envelope(const std::function<double(double)>& fn, double delta,
                                   double scale, bool include_exterior) {
    EnvelopeExtrema out;
    auto visit = [&](double s) {
        const double v = fn(s);
        if (v < out.min_value) {
            out.min_value = v;
            out.min_arg = s;
        }
        if (v > out.max_value) {
            out.max_value = v;
            out.max_arg = s;
        }
    };
    const int nt = 1 << 15;
    auto at_t = [&](double t) { return (1.0 - 2.0 * delta * (1.0 - t)) * scale; };
    int imin = 0, imax = 0;
    for (int i = 0; i <= nt; ++i) {
        const double s = at_t(static_cast<double>(i) / nt);
        const double v = fn(s);
        if (v < out.min_value) {
            out.min_value = v;
            out.min_arg = s;
            imin = i;
        }
        if (v > out.max_value) {
            out.max_value = v;
            out.max_arg = s;
            imax = i;
        }
    }
    auto g = [&](double t) { return fn(at_t(t)); };
    auto refine = [&](int i, bool want_max) {
        if (i <= 0 || i >= nt) return;
        const double t = golden_section(g, (i - 1.0) / nt, (i + 1.0) / nt, want_max);
        visit(at_t(t));
    };
    refine(imin, false);
    refine(imax, true);
    const double edge = (1.0 - 2.0 * delta) * scale;
    visit(0.0);
    visit(0.5 * edge);
    visit(edge);
    if (include_exterior) {
        visit(1.0625 * scale);
        visit(1.25 * scale);
    }
    return out;
}

// Lower bound on mu_s3 for a class of the given kind at iterate k, valid
// for every admissible k (n | k for pocket kinds).  Exact for the point
// and region kinds; for circles it bounds the congruence integer by its
// admissible range, and for the pocket plateau it uses that the slope
// multiple k |theta| = k n - k nu is a positive integer when the family
// exists, so k nu >= 1.
long long family_floor_mu_s3(const SectorParams& params, OrbitKind kind, int k) {
    const long long kk = k;
    const long long n = params.n;
    switch (kind) {
        case OrbitKind::Origin:
            return 4 * kk + 2 * ((kk + n - 1) / n) - 1;
        case OrbitKind::Circle:
            return 4 * kk + 1;
        case OrbitKind::Plateau:
            return 4 * kk + 2 * (kk / n) - 1;
        case OrbitKind::Exterior:
            return 4 * kk - 1;
        case OrbitKind::PocketCenter:
            return 4 * kk + 2 * (kk / n) - 2 * n * kk + 1;
        case OrbitKind::PocketCircle:
            return 4 * kk + 2 * (kk / n) - 2 * n * kk + 2;
        case OrbitKind::PocketPlateau:
            return 4 * kk + 2 * (kk / n) - 2 * n * kk + 1;
        case OrbitKind::PocketBoundary:
            return 4 * kk + 2 * (kk / n) - 1;
    }
    return 0;
}

// Smallest iterate at which the family can appear at all.
int family_first_k(const SectorParams& params, OrbitKind kind) {
    switch (kind) {
        case OrbitKind::Origin:
        case OrbitKind::Exterior:
            return 1;
        case OrbitKind::Circle:
            return params.n + 1;
        case OrbitKind::PocketPlateau: {
            // Needs k nu to be a positive integer on top of n | k.
            const double nu = params.nu();
            const long long lower = static_cast<long long>(std::ceil(1.0 / nu));
            const long long n = params.n;
            return static_cast<int>(std::min<long long>(((lower + n - 1) / n) * n, 1 << 28));
        }
        default:
            return params.n;
    }
}

int family_step_k(const SectorParams& params, OrbitKind kind) {
    switch (kind) {
        case OrbitKind::Origin:
        case OrbitKind::Circle:
        case OrbitKind::Exterior:
            return 1;
        default:
            return params.n;
    }
}

StatementCheck family_certificate(const SectorParams& params, OrbitKind kind) {
    const int k0 = family_first_k(params, kind);
    const int dk = family_step_k(params, kind);
    const long long first = family_floor_mu_s3(params, kind, k0);
    const long long step = family_floor_mu_s3(params, kind, k0 + dk) - first;
    StatementCheck out;
    out.name = to_string(kind);
    if (step >= 0) {
        out.pass = first >= 3;
        out.margin = static_cast<double>(first - 3);
        out.detail = "index floor over all iterates starts at " + std::to_string(first) +
                     " for k = " + std::to_string(k0) + " and never decreases";
        return out;
    }
    // The floor decreases without bound; find the first iterate below 3.
    long long k = k0;
    long long value = first;
    while (value >= 3) {
        k += dk;
        value += step;
    }
    out.pass = false;
    out.margin = static_cast<double>(value - 3);
    out.detail = "index floor decreases by " + std::to_string(-step) +
                 " per iterate step and reaches " + std::to_string(value) +
                 " at k = " + std::to_string(k);
    return out;
}

}  // namespace

ReebOrbitClass lift_class(const SectorParams& params, const OrbitClass& cls, int k) {
    if (k < 1) throw std::invalid_argument("lift_class: need k >= 1");
    ReebOrbitClass out;
    out.binding = false;
    out.source = cls;
    out.k = k;
    out.T = k * (kPi + cls.sigma);
    out.mu_s3 = cz_class(params, cls, k) + 4 * k;
    out.rho_bar = (2.0 + 0.5 * cls.mu_mean_per_k) / (kPi + cls.sigma);
    return out;
}

ReebOrbitClass lift_binding(int k) {
    if (k < 1) throw std::invalid_argument("lift_binding: need k >= 1");
    ReebOrbitClass out;
    out.binding = true;
    out.k = k;
    out.T = k * kPi;
    out.mu_s3 = 4 * k - 1;
    out.rho_bar = 2.0 / kPi;
    return out;
}

double rho_bar_profile_ambient(const SectorParams& params, double s) {
    return (2.0 + 0.5 * mean_index_profile_ambient(params, s)) /
           (kPi + action_profile_ambient(params, s));
}

double rho_bar_profile_pocket(const SectorParams& params, double s) {
    return (2.0 + 0.5 * mean_index_profile_pocket(params, s)) /
           (kPi + action_profile_pocket(params, s));
}

double t_min(const SectorParams& params) {
    const auto ambient = scan_profile([&](double s) { return action_profile_ambient(params, s); },
                                      params.profile(), 1.0, true);
    const auto pocket = scan_profile([&](double s) { return action_profile_pocket(params, s); },
                                     params.profile(), params.pocket_scale(), false);
    // A disk class at iterate k has period k (pi + sigma); pocket classes
    // exist only from iterate n on.
    const double ambient_min = kPi + ambient.min_value;
    const double pocket_min = params.n * (kPi + pocket.min_value);
    return std::min({kPi, ambient_min, pocket_min});
}

double volume(const SectorParams& params) { return kPi * kPi + calabi_phi(params); }

double systolic_ratio(const SectorParams& params) {
    const double t0 = t_min(params);
    return t0 * t0 / volume(params);
}

ContactInvariants invariants_sS(const SectorParams& params) {
    const double t0 = t_min(params);
    const auto ambient = extremize_envelope(
        [&](double s) { return rho_bar_profile_ambient(params, s); }, params.delta, 1.0, true);
    const auto pocket = extremize_envelope(
        [&](double s) { return rho_bar_profile_pocket(params, s); }, params.delta,
        params.pocket_scale(), false);
    const double binding_rho = 2.0 / kPi;
    const double inf_rho = std::min({ambient.min_value, pocket.min_value, binding_rho});
    const double sup_rho = std::max({ambient.max_value, pocket.max_value, binding_rho});
    ContactInvariants out;
    out.s = t0 * inf_rho;
    out.S = t0 * sup_rho;
    out.Delta = out.S - out.s;
    return out;
}

ContactInvariants invariants_sS_enumerated(const SectorParams& params, int k_max) {
    if (k_max < 1) throw std::invalid_argument("invariants_sS_enumerated: need k_max >= 1");
    const double t0 = t_min(params);
    double inf_rho = 2.0 / kPi;
    double sup_rho = 2.0 / kPi;
    for (int k = 1; k <= k_max; ++k) {
        for (const OrbitClass& cls : enumerate_orbit_classes(params, k)) {
            const double rho = lift_class(params, cls, k).rho_bar;
            inf_rho = std::min(inf_rho, rho);
            sup_rho = std::max(sup_rho, rho);
        }
    }
    ContactInvariants out;
    out.s = t0 * inf_rho;
    out.S = t0 * sup_rho;
    out.Delta = out.S - out.s;
    return out;
}

bool ConvexityReport::all_certified() const {
    return std::all_of(certificates.begin(), certificates.end(),
                       [](const StatementCheck& c) { return c.pass; });
}

ConvexityReport check_dynamical_convexity(const SectorParams& params, int k_max) {
    if (k_max < 1) throw std::invalid_argument("check_dynamical_convexity: need k_max >= 1");
    ConvexityReport out;
    out.k_max = k_max;

    bool have_witness = false;
    bool sweep_undercut = false;
    std::string undercut_detail;
    for (int k = 1; k <= k_max; ++k) {
        auto consider = [&](const ReebOrbitClass& r) {
            if (!have_witness || r.mu_s3 < out.witness.mu_s3) {
                out.witness = r;
                have_witness = true;
            }
            if (r.mu_s3 < 0 && !out.negative_witness) out.negative_witness = r;
        };
        consider(lift_binding(k));
        for (const OrbitClass& cls : enumerate_orbit_classes(params, k)) {
            const ReebOrbitClass r = lift_class(params, cls, k);
            if (r.mu_s3 < family_floor_mu_s3(params, cls.kind, k)) {
                sweep_undercut = true;
                undercut_detail = orbit_label(r) + " has index " + std::to_string(r.mu_s3) +
                                  " below its family floor";
            }
            consider(r);
        }
    }

    StatementCheck binding_cert;
    binding_cert.name = "binding";
    binding_cert.pass = true;
    binding_cert.margin = 0.0;
    binding_cert.detail = "index 4k - 1 meets the bound exactly at k = 1";
    out.certificates.push_back(binding_cert);
    for (OrbitKind kind :
         {OrbitKind::Origin, OrbitKind::Circle, OrbitKind::Plateau, OrbitKind::Exterior,
          OrbitKind::PocketCenter, OrbitKind::PocketCircle, OrbitKind::PocketPlateau,
          OrbitKind::PocketBoundary}) {
        out.certificates.push_back(family_certificate(params, kind));
    }
    if (sweep_undercut) {
        StatementCheck bad;
        bad.name = "sweep cross-check";
        bad.pass = false;
        bad.margin = -1.0;
        bad.detail = undercut_detail;
        out.certificates.push_back(bad);
    }

    out.dynamically_convex = out.all_certified() && have_witness && out.witness.mu_s3 >= 3;
    return out;
}

ContactFormReport contact_form_report(const SectorParams& params, int k_max) {
    ContactFormReport out;
    out.t_min = t_min(params);
    out.volume = volume(params);
    out.rho_sys = out.t_min * out.t_min / out.volume;
    const ContactInvariants inv = invariants_sS(params);
    out.s = inv.s;
    out.S = inv.S;
    out.Delta = inv.Delta;
    const ConvexityReport conv = check_dynamical_convexity(params, k_max);
    out.dynamically_convex = conv.dynamically_convex;
    out.convexity_witness = conv.witness;
    out.negative_index_witness = conv.negative_witness;
    return out;
}

ReebOrbitClass reference_orbit(int k) { return lift_binding(k); }

ContactFormReport reference_contact_report() {
    // With the identity disk map the closed orbits are exactly the covers
    // of the Hopf fibers, all of period pi per cover, so every invariant
    // has a closed form.
    ContactFormReport out;
    out.t_min = kPi;
    out.volume = kPi * kPi;
    out.rho_sys = 1.0;
    out.s = 2.0;
    out.S = 2.0;
    out.Delta = 0.0;
    out.dynamically_convex = true;
    out.convexity_witness = lift_binding(1);
    return out;
}

bool TheoremVerification::all_pass() const {
    return map.all_pass() && std::all_of(clauses.begin(), clauses.end(),
                                         [](const StatementCheck& c) { return c.pass; });
}

const StatementCheck* TheoremVerification::first_failure() const {
    if (const StatementCheck* f = map.first_failure()) return f;
    for (const StatementCheck& c : clauses)
        if (!c.pass) return &c;
    return nullptr;
}

TheoremVerification verify_theorems(int n, double eps, int k_max) {
    return verify_theorems_with(select_params(n, eps), k_max);
}

TheoremVerification verify_theorems_with(const SectorParams& params, int k_max) {
    const int n = params.n;
    const double eps = params.eps;
    if (k_max <= 0)
        k_max = 8 * n;
    TheoremVerification out{params, verify_map(params), contact_form_report(params, k_max), {}};
    const ContactFormReport& c = out.contact;
    const double gap = static_cast<double>((n - 1) * (n - 1));

    {
        StatementCheck check;
        check.name = "systolic ratio window";
        check.margin = std::min(c.rho_sys - (n - eps), n - c.rho_sys);
        check.pass = check.margin > 0.0;
        check.detail = "rho_sys = " + fmt(c.rho_sys) + " against (" + fmt(n - eps) + ", " +
                       fmt(static_cast<double>(n)) + ")";
        out.clauses.push_back(check);
    }
    {
        StatementCheck check;
        check.name = "maximal invariant";
        check.margin = 1e-10 - std::abs(c.S - 2.0);
        check.pass = check.margin >= 0.0;
        check.detail = "S = " + fmt(c.S) + " against 2 within 1e-10";
        out.clauses.push_back(check);
    }
    {
        StatementCheck check;
        check.name = "minimal invariant window";
        const double lo = 2.0 - gap;
        check.margin = std::min(c.s - lo, lo + eps - c.s);
        check.pass = check.margin > 0.0;
        check.detail = "s = " + fmt(c.s) + " against (" + fmt(lo) + ", " + fmt(lo + eps) + ")";
        out.clauses.push_back(check);
    }
    {
        StatementCheck check;
        check.name = "gap window";
        check.margin = std::min(c.Delta - (gap - eps), gap - c.Delta);
        check.pass = check.margin > 0.0;
        check.detail = "Delta = " + fmt(c.Delta) + " against (" + fmt(gap - eps) + ", " + fmt(gap) + ")";
        out.clauses.push_back(check);
    }
    {
        StatementCheck check;
        check.name = "minimal period";
        check.margin = 1e-12 - std::abs(c.t_min - kPi);
        check.pass = check.margin >= 0.0;
        check.detail = "t_min = " + fmt(c.t_min) + " against pi";
        out.clauses.push_back(check);
    }
    if (n == 2) {
        StatementCheck check;
        check.name = "dynamical convexity";
        check.pass = c.dynamically_convex && c.convexity_witness.mu_s3 >= 3;
        check.margin = static_cast<double>(c.convexity_witness.mu_s3 - 3);
        check.detail = "minimal index " + std::to_string(c.convexity_witness.mu_s3) + " at " +
                       orbit_label(c.convexity_witness) + ", certified for every iterate";
        out.clauses.push_back(check);
    } else {
        StatementCheck check;
        check.name = "negative index orbits";
        check.pass = c.negative_index_witness.has_value() && c.negative_index_witness->mu_s3 < 0;
        check.margin = c.negative_index_witness
                           ? static_cast<double>(-c.negative_index_witness->mu_s3)
                           : -1.0;
        check.detail = c.negative_index_witness
                           ? "index " + std::to_string(c.negative_index_witness->mu_s3) + " at " +
                                 orbit_label(*c.negative_index_witness)
                           : "no orbit with negative index found";
        out.clauses.push_back(check);
    }
    return out;
}

}  // namespace diskflow
