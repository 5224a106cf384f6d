#include "diskflow/construction.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace diskflow {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Floating-point latitude for the non-strict inequalities; several of them
// are attained exactly (exterior points, the distinguished pocket orbit).
constexpr double kSlack = 1e-12;

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

double sigma_of(const RadialHamiltonian& ham, double s) {
    return ham.h(s) - s * ham.dh(s);
}

// Index of a transition circle from its exact congruence integer at the
// requested iterate.  Transition circles sit where chi'' >= 0, so the parity
// branch is decided by the sign of the amplitude alone: positive for the
// ambient piece, negative for the pocket (theta < 0).
int circle_index_from_congruence(int q, bool negative_amplitude) {
    const int even_part = -2 * q;
    return negative_amplitude ? even_part : even_part - 1;
}

// Rescales a circle's congruence integer from its enumerating iterate to the
// requested one; exact, so a foreign iterate is detected without tolerance.
int rescale_congruence(const OrbitClass& cls, int k) {
    if (cls.congruence == 0)
        throw std::invalid_argument("cz_class: circle class carries no congruence integer");
    const long long scaled = static_cast<long long>(cls.congruence) * k;
    if (scaled % cls.k != 0)
        throw std::invalid_argument("cz_class: circle is not fixed by the requested iterate");
    return static_cast<int>(scaled / cls.k);
}

bool is_pocket_kind(OrbitKind kind) {
    switch (kind) {
        case OrbitKind::PocketCenter:
        case OrbitKind::PocketCircle:
        case OrbitKind::PocketPlateau:
        case OrbitKind::PocketBoundary:
            return true;
        default:
            return false;
    }
}

}  // namespace

SectorParams::SectorParams(int n_, double eps_, double theta_, double eta_, double delta_)
    : n(n_), eps(eps_), theta(theta_), eta(eta_), delta(delta_) {
    if (n < 2) throw std::invalid_argument("SectorParams: need n >= 2");
    if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("SectorParams: need eps > 0");
    if (!(theta > -static_cast<double>(n) && theta < -static_cast<double>(n) + 1.0))
        throw std::invalid_argument("SectorParams: need theta in (-n, -n + 1)");
    if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("SectorParams: need eta in (0, 1)");
    if (!(delta > 0.0 && delta < 0.5)) throw std::invalid_argument("SectorParams: need delta in (0, 1/2)");
}

double SectorParams::pocket_radius() const { return std::sqrt(pocket_scale()); }

RadialHamiltonian SectorParams::ambient() const {
    return RadialHamiltonian(kPi / n, 1.0, profile());
}

RadialHamiltonian SectorParams::pocket() const {
    const double scale = pocket_scale();
    return RadialHamiltonian(kPi * scale * theta, scale, profile());
}

const char* to_string(OrbitKind kind) {
    switch (kind) {
        case OrbitKind::Origin: return "origin";
        case OrbitKind::Circle: return "circle";
        case OrbitKind::Plateau: return "plateau";
        case OrbitKind::Exterior: return "exterior";
        case OrbitKind::PocketCenter: return "pocket_center";
        case OrbitKind::PocketCircle: return "pocket_circle";
        case OrbitKind::PocketPlateau: return "pocket_plateau";
        case OrbitKind::PocketBoundary: return "pocket_boundary";
    }
    return "unknown";
}

const char* to_string(OrbitMultiplicity multiplicity) {
    switch (multiplicity) {
        case OrbitMultiplicity::Point: return "point";
        case OrbitMultiplicity::CircleFamily: return "circle_family";
        case OrbitMultiplicity::Region: return "region";
    }
    return "unknown";
}

double action_profile_ambient(const SectorParams& params, double s) {
    return sigma_of(params.ambient(), s);
}

double action_profile_pocket(const SectorParams& params, double s) {
    return (kPi / params.n) * (1.0 - params.delta) + sigma_of(params.pocket(), s);
}

double mean_index_profile_ambient(const SectorParams& params, double s) {
    return -2.0 * params.ambient().dh(s) / kPi;
}

double mean_index_profile_pocket(const SectorParams& params, double s) {
    return 2.0 / params.n - 2.0 * params.pocket().dh(s) / kPi;
}

double action_sigma(const SectorParams& params, const OrbitClass& cls) {
    return is_pocket_kind(cls.kind) ? action_profile_pocket(params, cls.squared_radius)
                                    : action_profile_ambient(params, cls.squared_radius);
}

int cz_class(const SectorParams& params, const OrbitClass& cls, int k) {
    if (!is_pocket_kind(cls.kind)) {
        if (cls.kind == OrbitKind::Circle)
            return circle_index_from_congruence(rescale_congruence(cls, k), false);
        return cz_fixed_point(params.ambient(), k, cls.squared_radius);
    }
    if (k % params.n != 0)
        throw std::invalid_argument("cz_class: pocket classes exist only at iterates divisible by n");
    const int inner = cls.kind == OrbitKind::PocketCircle
                          ? circle_index_from_congruence(rescale_congruence(cls, k), true)
                          : cz_fixed_point(params.pocket(), k, cls.squared_radius);
    return 2 * (k / params.n) + inner;
}

double mean_cz_class(const SectorParams& params, const OrbitClass& cls) {
    if (!is_pocket_kind(cls.kind)) return mean_cz_fixed_point(params.ambient(), cls.squared_radius);
    return 2.0 / params.n + mean_cz_fixed_point(params.pocket(), cls.squared_radius);
}

double calabi_phi(const SectorParams& params) {
    return calabi(params.ambient()) + params.n * calabi(params.pocket());
}

namespace {

OrbitClass finish_class(const SectorParams& params, OrbitKind kind, int k, int min_period,
                        double squared_radius, OrbitMultiplicity multiplicity, int congruence = 0) {
    OrbitClass cls;
    cls.kind = kind;
    cls.k = k;
    cls.min_period = min_period;
    cls.squared_radius = squared_radius;
    cls.multiplicity = multiplicity;
    cls.congruence = congruence;
    cls.sigma = action_sigma(params, cls);
    cls.mu = cz_class(params, cls, k);
    cls.mu_mean_per_k = mean_cz_class(params, cls);
    return cls;
}

int circle_min_period(int k, int congruence) {
    const int g = std::gcd(k, std::abs(congruence));
    return k / std::max(g, 1);
}

int plateau_slope_min_period(double slope_turns, int n, int k) {
    // Smallest multiple of n whose slope multiple is an integer; exists
    // within k because the plateau showed up in the fixed set at iterate k.
    for (int kp = n; kp <= k; kp += n) {
        const double v = kp * slope_turns;
        if (std::abs(v - std::lround(v)) <= 1e-9) return kp;
    }
    return k;
}

}  // namespace

std::vector<OrbitClass> enumerate_orbit_classes(const SectorParams& params, int k) {
    if (k < 1) throw std::invalid_argument("enumerate_orbit_classes: need k >= 1");
    std::vector<OrbitClass> out;
    const RadialHamiltonian ambient = params.ambient();
    const double delta = params.delta;

    out.push_back(finish_class(params, OrbitKind::Origin, k, 1, 0.0, OrbitMultiplicity::Point));

    const FixedPointSet ambient_fixed = fixed_point_radii(ambient, k);
    for (std::size_t i = 0; i < ambient_fixed.squared_radii.size(); ++i) {
        const int q = ambient_fixed.congruences[i];
        out.push_back(finish_class(params, OrbitKind::Circle, k, circle_min_period(k, q),
                                   ambient_fixed.squared_radii[i], OrbitMultiplicity::CircleFamily,
                                   q));
    }
    for (const auto& interval : ambient_fixed.squared_intervals) {
        if (interval.first == 0.0) {
            out.push_back(finish_class(params, OrbitKind::Plateau, k, params.n,
                                       0.5 * (1.0 - 2.0 * delta), OrbitMultiplicity::Region));
        } else {
            out.push_back(
                finish_class(params, OrbitKind::Exterior, k, 1, 1.25, OrbitMultiplicity::Region));
        }
    }

    if (k % params.n == 0) {
        const RadialHamiltonian pocket = params.pocket();
        const double scale = params.pocket_scale();
        out.push_back(
            finish_class(params, OrbitKind::PocketCenter, k, params.n, 0.0, OrbitMultiplicity::Point));
        const FixedPointSet pocket_fixed = fixed_point_radii(pocket, k);
        for (std::size_t i = 0; i < pocket_fixed.squared_radii.size(); ++i) {
            const int q = pocket_fixed.congruences[i];
            const int inner = circle_min_period(k, q);
            out.push_back(finish_class(params, OrbitKind::PocketCircle, k, std::lcm(params.n, inner),
                                       pocket_fixed.squared_radii[i],
                                       OrbitMultiplicity::CircleFamily, q));
        }
        for (const auto& interval : pocket_fixed.squared_intervals) {
            if (interval.first == 0.0) {
                out.push_back(finish_class(params, OrbitKind::PocketPlateau, k,
                                           plateau_slope_min_period(-params.theta, params.n, k),
                                           0.5 * (1.0 - 2.0 * delta) * scale, OrbitMultiplicity::Region));
            } else {
                out.push_back(finish_class(params, OrbitKind::PocketBoundary, k, params.n, scale,
                                           OrbitMultiplicity::CircleFamily));
            }
        }
    }
    return out;
}

ScanExtrema scan_profile(const std::function<double(double)>& fn, const CutoffProfile& profile,
                         double scale, bool include_exterior, int transition_points) {
    const double delta = profile.delta();
    ScanExtrema out{std::numeric_limits<double>::infinity(), 0.0,
                    -std::numeric_limits<double>::infinity(), 0.0};
    auto visit = [&](double s) {
        const double v = fn(s);
        if (v < out.min_value) { out.min_value = v; out.min_arg = s; }
        if (v > out.max_value) { out.max_value = v; out.max_arg = s; }
    };
    const double edge = (1.0 - 2.0 * delta) * scale;
    for (int i = 0; i <= 64; ++i) visit(edge * i / 64.0);
    // The transition is sampled uniformly in its own parameter so that an
    // arbitrarily thin transition stays fully resolved.
    for (int i = 0; i <= transition_points; ++i) {
        const double t = static_cast<double>(i) / transition_points;
        visit((1.0 - 2.0 * delta * (1.0 - t)) * scale);
    }
    if (include_exterior) {
        visit(1.0625 * scale);
        visit(1.25 * scale);
    }
    return out;
}

bool MapVerification::all_pass() const {
    for (const auto& statement : statements)
        if (!statement.pass) return false;
    return true;
}

const StatementCheck* MapVerification::first_failure() const {
    for (const auto& statement : statements)
        if (!statement.pass) return &statement;
    return nullptr;
}

namespace {

// Lower bound, affine in k, for the margin of the index inequality
// mu >= -2nk + 2k/n + 1 in each class family.  slope * k + offset is a
// certified under-approximation of the exact margin for every k >= 1:
//   origin          2 ceil(k/n) - 1 - bound            >= 2nk - 2
//   circle          mu = -2m - 1 with m <= -1          >= 2k(n - 1/n)
//   plateau         mu = 2k/n - 1                      =  2nk - 2
//   exterior        mu = -1                            =  2k(n - 1/n) - 2
//   pocket center   margin = 2 ceil(k nu) - 2          >= 0
//   pocket circle   mu = 2k/n - 2m, m <= nk - 1        >= 1
//   pocket plateau  margin = 2k nu - 2, k nu integer   >= 0
//   pocket boundary mu = 2k/n - 1                      =  2nk - 2
struct AffineFloor {
    double slope;
    double offset;
};

AffineFloor index_margin_floor(OrbitKind kind, int n) {
    const double dn = n;
    switch (kind) {
        case OrbitKind::Origin: return {2.0 * dn, -2.0};
        case OrbitKind::Circle: return {2.0 * (dn - 1.0 / dn), 0.0};
        case OrbitKind::Plateau: return {2.0 * dn, -2.0};
        case OrbitKind::Exterior: return {2.0 * (dn - 1.0 / dn), -2.0};
        case OrbitKind::PocketCenter: return {0.0, 0.0};
        case OrbitKind::PocketCircle: return {0.0, 1.0};
        case OrbitKind::PocketPlateau: return {0.0, 0.0};
        case OrbitKind::PocketBoundary: return {2.0 * dn, -2.0};
    }
    return {0.0, 0.0};
}

StatementCheck check_action_bounds(const SectorParams& params,
                                   const std::vector<std::vector<OrbitClass>>& classes) {
    const int n = params.n;
    const double lo = -kPi + kPi / n;
    const double hi = kPi / n;
    const CutoffProfile profile = params.profile();
    const ScanExtrema ambient =
        scan_profile([&](double s) { return action_profile_ambient(params, s); }, profile, 1.0, true);
    const ScanExtrema pocket = scan_profile([&](double s) { return action_profile_pocket(params, s); },
                                            profile, params.pocket_scale(), false);
    const double min_sigma = std::min(ambient.min_value, pocket.min_value);
    const double max_sigma = std::max(ambient.max_value, pocket.max_value);
    const double window_margin = std::min(min_sigma - lo, hi - max_sigma);
    double fixed_margin = std::numeric_limits<double>::infinity();
    for (const auto& cls : classes[0])
        fixed_margin = std::min(fixed_margin, cls.sigma);
    StatementCheck check;
    check.name = "(i) action window";
    check.pass = window_margin > 0.0 && fixed_margin >= -kSlack;
    check.margin = fixed_margin >= -kSlack ? window_margin : fixed_margin;
    check.detail = "sigma in [" + fmt(min_sigma) + ", " + fmt(max_sigma) + "], min over Fix(phi) = " +
                   fmt(fixed_margin);
    return check;
}

StatementCheck check_calabi_window(const SectorParams& params) {
    const double cal = calabi_phi(params);
    const double lo = -kPi * kPi * (1.0 - 1.0 / params.n);
    const double margin = std::min(cal - lo, lo + params.eps - cal);
    StatementCheck check;
    check.name = "(ii) calabi window";
    check.pass = margin > 0.0;
    check.margin = margin;
    check.detail = "Cal = " + fmt(cal) + ", window (" + fmt(lo) + ", " + fmt(lo + params.eps) + ")";
    return check;
}

StatementCheck check_index_lower_bound(const SectorParams& params,
                                       const std::vector<std::vector<OrbitClass>>& classes) {
    const int n = params.n;
    StatementCheck check;
    check.name = "(iii) index lower bound";
    double worst = std::numeric_limits<double>::infinity();
    std::string worst_at = "none";
    bool floors_consistent = true;
    double cert_floor = std::numeric_limits<double>::infinity();
    for (const auto& at_k : classes) {
        for (const auto& cls : at_k) {
            const double bound = -2.0 * n * cls.k + 2.0 * static_cast<double>(cls.k) / n + 1.0;
            const double margin = cls.mu - bound;
            if (margin < worst) {
                worst = margin;
                worst_at = std::string(to_string(cls.kind)) + " at k=" + std::to_string(cls.k);
            }
            const AffineFloor floor = index_margin_floor(cls.kind, n);
            if (margin < floor.slope * cls.k + floor.offset - 1e-9) floors_consistent = false;
            cert_floor = std::min(cert_floor, floor.slope + floor.offset);
        }
    }
    double fix_margin = std::numeric_limits<double>::infinity();
    for (const auto& cls : classes[0]) fix_margin = std::min(fix_margin, cls.mu + 1.0);
    check.pass = worst >= -kSlack && fix_margin >= -kSlack && floors_consistent && cert_floor >= 0.0;
    check.margin = std::min({worst, fix_margin, cert_floor});
    check.detail = "worst sweep margin " + fmt(worst) + " (" + worst_at + "), k=1 floor " +
                   fmt(fix_margin) + ", all-k certificate floor " + fmt(cert_floor) +
                   (floors_consistent ? "" : ", certificate inconsistent with sweep");
    return check;
}

StatementCheck check_action_invariance(const SectorParams& params) {
    std::mt19937 rng(0x5eedu);
    std::uniform_real_distribution<double> amb(0.0, 1.2);
    std::uniform_real_distribution<double> pock(0.0, params.pocket_scale());
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    const RadialHamiltonian ambient = params.ambient();
    const RadialHamiltonian pocket = params.pocket();
    double max_dev = 0.0;
    for (int trial = 0; trial < 512; ++trial) {
        const double sa = amb(rng);
        const double ta = angle(rng);
        const Vec2 z{std::sqrt(sa) * std::cos(ta), std::sqrt(sa) * std::sin(ta)};
        const Vec2 zf = radial_flow(ambient, z, 1.0);
        max_dev = std::max(max_dev, std::abs(action_profile_ambient(params, zf[0] * zf[0] + zf[1] * zf[1]) -
                                             action_profile_ambient(params, sa)));
        const double sp = pock(rng);
        const double tp = angle(rng);
        const Vec2 w{std::sqrt(sp) * std::cos(tp), std::sqrt(sp) * std::sin(tp)};
        const Vec2 wf = radial_flow(pocket, w, 1.0);
        max_dev = std::max(max_dev, std::abs(action_profile_pocket(params, wf[0] * wf[0] + wf[1] * wf[1]) -
                                             action_profile_pocket(params, sp)));
    }
    StatementCheck check;
    check.name = "(iv) action invariance";
    check.pass = max_dev <= kSlack;
    check.margin = kSlack - max_dev;
    check.detail = "max |sigma o phi - sigma| = " + fmt(max_dev) + " over 1024 sample points";
    return check;
}

StatementCheck check_minimal_period(const SectorParams& params,
                                    const std::vector<std::vector<OrbitClass>>& classes) {
    const int n = params.n;
    StatementCheck check;
    check.name = "(v) minimal period";
    double worst = std::numeric_limits<double>::infinity();
    std::string worst_at = "no non-fixed classes";
    for (const auto& at_k : classes) {
        for (const auto& cls : at_k) {
            if (cls.min_period == 1) continue;
            const double margin = cls.min_period - n;
            if (margin < worst) {
                worst = margin;
                worst_at = std::string(to_string(cls.kind)) + " at k=" + std::to_string(cls.k) +
                           " with minimal period " + std::to_string(cls.min_period);
            }
        }
    }
    if (!std::isfinite(worst)) worst = 0.0;
    check.pass = worst >= 0.0;
    check.margin = worst;
    check.detail = worst_at;
    return check;
}

StatementCheck check_outer_pinch(const SectorParams& params) {
    const CutoffProfile profile = params.profile();
    const ScanExtrema nonneg =
        scan_profile([&](double s) { return action_profile_ambient(params, s); }, profile, 1.0, true);
    const ScanExtrema lower = scan_profile(
        [&](double s) {
            return mean_index_profile_ambient(params, s) - (2.0 / kPi) * action_profile_ambient(params, s);
        },
        profile, 1.0, true);
    const ScanExtrema upper = scan_profile(
        [&](double s) {
            return (2.0 / kPi + params.eps) * action_profile_ambient(params, s) -
                   mean_index_profile_ambient(params, s);
        },
        profile, 1.0, true);
    const double margin = std::min({nonneg.min_value, lower.min_value, upper.min_value});
    StatementCheck check;
    check.name = "(vi) outer action-index pinch";
    check.pass = margin >= -kSlack;
    check.margin = margin;
    check.detail = "min slack: sigma>=0 " + fmt(nonneg.min_value) + ", lower " + fmt(lower.min_value) +
                   " at s=" + fmt(lower.min_arg) + ", upper " + fmt(upper.min_value) + " at s=" +
                   fmt(upper.min_arg);
    return check;
}

StatementCheck check_pocket_pinch(const SectorParams& params) {
    const CutoffProfile profile = params.profile();
    const double n = params.n;
    const double nu = params.nu();
    const double sigma_floor = -kPi + (kPi / n) * (1.0 + nu);
    const ScanExtrema sigma = scan_profile([&](double s) { return action_profile_pocket(params, s); },
                                           profile, params.pocket_scale(), false);
    const ScanExtrema defect = scan_profile(
        [&](double s) {
            const double affine = 2.0 / n + (2.0 * n / kPi) * action_profile_pocket(params, s) - 2.0;
            return std::abs(mean_index_profile_pocket(params, s) - affine);
        },
        profile, params.pocket_scale(), false);
    const double sigma_margin = sigma.min_value - sigma_floor;
    const double pinch_margin = nu * nu - defect.max_value;
    StatementCheck check;
    check.name = "(vii) pocket action-index pinch";
    check.pass = sigma_margin >= -kSlack && pinch_margin >= -kSlack;
    check.margin = std::min(sigma_margin, pinch_margin);
    check.detail = "sigma floor margin " + fmt(sigma_margin) + ", pinch defect " +
                   fmt(defect.max_value) + " vs nu^2 = " + fmt(nu * nu);
    return check;
}

StatementCheck check_distinguished_orbit(const SectorParams& params,
                                         const std::vector<std::vector<OrbitClass>>& classes) {
    const int n = params.n;
    const double nu = params.nu();
    StatementCheck check;
    check.name = "(viii) distinguished orbit";
    const OrbitClass* center = nullptr;
    if (static_cast<int>(classes.size()) >= n) {
        for (const auto& cls : classes[n - 1])
            if (cls.kind == OrbitKind::PocketCenter) center = &cls;
    }
    if (center == nullptr) {
        check.pass = false;
        check.margin = -1.0;
        check.detail = "pocket center class missing at k = n";
        return check;
    }
    const double sigma_cap = -kPi + (kPi / n) * (1.0 + nu) + nu;
    const double sigma_margin = sigma_cap - center->sigma;
    const double mean_target = 2.0 / n - 2.0 * n + 2.0 * nu;
    const double mean_dev = std::abs(center->mu_mean_per_k - mean_target);
    check.pass = sigma_margin >= -kSlack && mean_dev < 1e-12;
    check.margin = sigma_margin;
    check.detail = "sigma(w0) = " + fmt(center->sigma) + " vs cap " + fmt(sigma_cap) +
                   ", mean index deviation " + fmt(mean_dev);
    return check;
}

}  // namespace

MapVerification verify_map(const SectorParams& params, int k_max) {
    if (k_max <= 0) k_max = 8 * params.n;
    std::vector<std::vector<OrbitClass>> classes;
    classes.reserve(k_max);
    for (int k = 1; k <= k_max; ++k) classes.push_back(enumerate_orbit_classes(params, k));

    MapVerification out;
    out.k_max = k_max;
    out.statements.push_back(check_action_bounds(params, classes));
    out.statements.push_back(check_calabi_window(params));
    out.statements.push_back(check_index_lower_bound(params, classes));
    out.statements.push_back(check_action_invariance(params));
    out.statements.push_back(check_minimal_period(params, classes));
    out.statements.push_back(check_outer_pinch(params));
    out.statements.push_back(check_pocket_pinch(params));
    out.statements.push_back(check_distinguished_orbit(params, classes));
    return out;
}

namespace {

// Preview of the sphere-side windows, in disk arithmetic: the ratio profile
// (2 + mean/2) / (pi + sigma) must stay below 2/pi everywhere and its
// infimum, scaled by pi, must land in the requested window.
std::string window_preview_failure(const SectorParams& params) {
    const int n = params.n;
    const double eps = params.eps;
    const double cal = calabi_phi(params);
    const double rho_sys = kPi * kPi / (kPi * kPi + cal);
    if (!(rho_sys > n - eps && rho_sys < n)) return "systolic ratio window preview";

    const CutoffProfile profile = params.profile();
    auto ratio_ambient = [&](double s) {
        return (2.0 + 0.5 * mean_index_profile_ambient(params, s)) /
               (kPi + action_profile_ambient(params, s));
    };
    auto ratio_pocket = [&](double s) {
        return (2.0 + 0.5 * mean_index_profile_pocket(params, s)) /
               (kPi + action_profile_pocket(params, s));
    };
    const ScanExtrema amb = scan_profile(ratio_ambient, profile, 1.0, true);
    const ScanExtrema pock = scan_profile(ratio_pocket, profile, params.pocket_scale(), false);
    if (std::max(amb.max_value, pock.max_value) > 2.0 / kPi + 1e-12)
        return "ratio profile dominance preview";

    const double s_value = kPi * std::min({amb.min_value, pock.min_value, 2.0 / kPi});
    const double b = 2.0 - (n - 1.0) * (n - 1.0);
    if (!(s_value > b && s_value < b + eps)) return "min action-index window preview";
    return "";
}

std::string a_posteriori_failure(const SectorParams& params) {
    if (!params.pockets_fit()) return "pocket containment eta < 1 - 2 delta";
    const MapVerification vm = verify_map(params);
    if (!vm.all_pass()) return "map check " + vm.first_failure()->name;
    return window_preview_failure(params);
}

}  // namespace

SectorParams select_params(int n, double eps) {
    if (n < 2) throw std::invalid_argument("select_params: need n >= 2");
    if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("select_params: need eps > 0");

    // nu controls every window at once; each guard below keeps one of them
    // open (calabi and systolic windows, the min action-index window), and
    // halving leaves room for the finite-eta, finite-delta corrections.
    double nu = std::min(eps, 0.05);
    if (n - eps > 0.0) nu = std::min(nu, eps / (n - eps));
    if (n * n - n - 1.0 - eps > 0.0) nu = std::min(nu, eps / (n * n - n - 1.0 - eps));
    nu = std::min(nu, n * eps / (kPi * kPi));
    nu *= 0.5;
    const double theta = -static_cast<double>(n) + nu;

    std::string last_failure = "no candidate tried";
    for (int j = 3; j <= 40; ++j) {
        const double eta = 1.0 - std::ldexp(1.0, -j);
        const double delta = std::ldexp(1.0, -(j + 3));
        const SectorParams candidate(n, eps, theta, eta, delta);
        last_failure = a_posteriori_failure(candidate);
        if (last_failure.empty()) return candidate;
    }
    throw ParamSearchError("select_params: schedule exhausted for n = " + std::to_string(n) +
                           ", eps = " + fmt(eps) + "; first failing check: " + last_failure);
}

}  // namespace diskflow
