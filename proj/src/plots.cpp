#include "diskflow/plots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace diskflow {
namespace {

constexpr double kPi = 3.14159265358979323846;

struct Series {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
    bool scatter = false;
};

struct RefLine {
    double y;
    std::string label;
};

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// A fixed-layout chart: one plot rectangle, linear axes with five ticks
// each, polyline or scatter series, dashed horizontal reference lines, and
// a legend block in the upper right.
std::string render_chart(const std::string& title, const std::string& x_label,
                         const std::string& y_label, const std::vector<Series>& series,
                         const std::vector<RefLine>& ref_lines) {
    const double width = 720, height = 440;
    const double left = 74, right = 692, top = 48, bottom = 392;

    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const Series& s : series) {
        for (const auto& p : s.points) {
            x_lo = std::min(x_lo, p.first);
            x_hi = std::max(x_hi, p.first);
            y_lo = std::min(y_lo, p.second);
            y_hi = std::max(y_hi, p.second);
        }
    }
    for (const RefLine& r : ref_lines) {
        y_lo = std::min(y_lo, r.y);
        y_hi = std::max(y_hi, r.y);
    }
    if (!(x_lo < x_hi)) { x_lo -= 0.5; x_hi += 0.5; }
    if (!(y_lo < y_hi)) { y_lo -= 0.5; y_hi += 0.5; }
    const double x_pad = 0.04 * (x_hi - x_lo), y_pad = 0.07 * (y_hi - y_lo);
    x_lo -= x_pad; x_hi += x_pad;
    y_lo -= y_pad; y_hi += y_pad;

    const auto X = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * (right - left); };
    const auto Y = [&](double y) { return bottom - (y - y_lo) / (y_hi - y_lo) * (bottom - top); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"26\" text-anchor=\"middle\" font-family=\"sans-serif\""
        << " font-size=\"16\">" << title << "</text>\n";

    out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << right - left
        << "\" height=\"" << bottom - top << "\" fill=\"none\" stroke=\"#333\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = x_lo + (x_hi - x_lo) * i / 4.0;
        const double yv = y_lo + (y_hi - y_lo) * i / 4.0;
        out << "<line x1=\"" << X(xv) << "\" y1=\"" << bottom << "\" x2=\"" << X(xv) << "\" y2=\""
            << bottom + 5 << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << X(xv) << "\" y=\"" << bottom + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << num(xv)
            << "</text>\n";
        out << "<line x1=\"" << left - 5 << "\" y1=\"" << Y(yv) << "\" x2=\"" << left << "\" y2=\""
            << Y(yv) << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << left - 8 << "\" y=\"" << Y(yv) + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << num(yv)
            << "</text>\n";
    }
    out << "<text x=\"" << (left + right) / 2 << "\" y=\"" << height - 8
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << x_label
        << "</text>\n";
    out << "<text x=\"18\" y=\"" << (top + bottom) / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\""
        << " transform=\"rotate(-90 18 " << (top + bottom) / 2 << ")\">" << y_label
        << "</text>\n";

    for (const RefLine& r : ref_lines) {
        out << "<line x1=\"" << left << "\" y1=\"" << Y(r.y) << "\" x2=\"" << right << "\" y2=\""
            << Y(r.y) << "\" stroke=\"#888\" stroke-dasharray=\"6 4\"/>\n";
        out << "<text x=\"" << left + 6 << "\" y=\"" << Y(r.y) - 4
            << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#555\">" << r.label
            << "</text>\n";
    }

    for (const Series& s : series) {
        if (s.scatter) {
            for (const auto& p : s.points) {
                out << "<circle cx=\"" << X(p.first) << "\" cy=\"" << Y(p.second)
                    << "\" r=\"3.2\" fill=\"" << s.color << "\" fill-opacity=\"0.75\"/>\n";
            }
        } else if (!s.points.empty()) {
            out << "<polyline fill=\"none\" stroke=\"" << s.color
                << "\" stroke-width=\"1.8\" points=\"";
            for (const auto& p : s.points) out << X(p.first) << ',' << Y(p.second) << ' ';
            out << "\"/>\n";
        }
    }

    double ly = top + 18;
    for (const Series& s : series) {
        out << "<rect x=\"" << right - 168 << "\" y=\"" << ly - 9
            << "\" width=\"12\" height=\"12\" fill=\"" << s.color << "\"/>\n";
        out << "<text x=\"" << right - 150 << "\" y=\"" << ly + 2
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label << "</text>\n";
        ly += 18;
    }

    out << "</svg>\n";
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out) throw std::runtime_error("short write to " + path);
}

// Radial coordinate warp: plateau to [0, 0.45], transition band to
// [0.45, 0.9], exterior to [0.9, 1].  u is the squared radius divided by
// the profile scale.
double warp(double u, double delta) {
    const double edge = 1.0 - 2.0 * delta;
    if (u <= edge) return 0.45 * u / edge;
    if (u >= 1.0) return 0.9 + 0.1 * std::min((u - 1.0) / 0.25, 1.0);
    return 0.45 + 0.45 * (u - edge) / (1.0 - edge);
}

// Samples f over the plateau, the transition band, and optionally the
// exterior, in the warped coordinate.  f takes the squared radius u scale.
std::vector<std::pair<double, double>> sample_profile(
    const std::function<double(double)>& f, double scale, double delta, bool exterior) {
    std::vector<std::pair<double, double>> pts;
    const double edge = 1.0 - 2.0 * delta;
    for (int i = 0; i <= 64; ++i) {
        const double u = edge * i / 64.0;
        pts.push_back({warp(u, delta), f(u * scale)});
    }
    for (int i = 1; i <= 256; ++i) {
        const double u = edge + (1.0 - edge) * i / 256.0;
        pts.push_back({warp(u, delta), f(u * scale)});
    }
    if (exterior) {
        for (int i = 1; i <= 32; ++i) {
            const double u = 1.0 + 0.25 * i / 32.0;
            pts.push_back({warp(u, delta), f(u * scale)});
        }
    }
    return pts;
}

const char* kWarpLabel = "squared radius / scale (transition band widened)";

}  // namespace

std::vector<std::string> emit_plots(const SectorParams& params, const std::string& out_dir,
                                    int k_max) {
    if (k_max < 1) throw std::invalid_argument("emit_plots: k_max must be positive");
    const double delta = params.delta;
    std::vector<std::string> paths;
    const auto emit = [&](const std::string& name, const std::string& content) {
        const std::string path = out_dir + "/" + name;
        write_file(path, content);
        paths.push_back(path);
    };

    // 1: the cutoff shape itself, unit amplitude and scale.
    {
        const RadialHamiltonian unitham(1.0, 1.0, params.profile());
        const double peak_slope = std::abs(unitham.dh(1.0 - delta));
        Series h{"h", "#1f77b4",
                 sample_profile([&](double s) { return unitham.h(s); }, 1.0, delta, true), false};
        Series dh{"h' / peak", "#d62728",
                  sample_profile([&](double s) { return unitham.dh(s) / peak_slope; }, 1.0, delta,
                                 true),
                  false};
        emit("cutoff_profile.svg",
             render_chart("cutoff profile, delta = " + num(delta), kWarpLabel,
                          "unit-amplitude profile", {h, dh}, {}));
    }

    // 2: the two radial Hamiltonians of the cell, each over its own disk.
    {
        const RadialHamiltonian ambient = params.ambient();
        const RadialHamiltonian pocket = params.pocket();
        Series a{"ambient twist", "#1f77b4",
                 sample_profile([&](double s) { return ambient.h(s); }, 1.0, delta, true), false};
        Series p{"pocket twist", "#d62728",
                 sample_profile([&](double s) { return pocket.h(s); }, params.pocket_scale(),
                                delta, false),
                 false};
        emit("hamiltonian_profiles.svg",
             render_chart("radial Hamiltonians, n = " + std::to_string(params.n), kWarpLabel,
                          "Hamiltonian value", {a, p}, {}));
    }

    // 3: mean rotation per unit action along both envelopes, with the
    // binding level and the attained extrema.
    {
        const ContactInvariants inv = invariants_sS(params);
        const double tm = t_min(params);
        Series a{"ambient envelope", "#1f77b4",
                 sample_profile([&](double s) { return rho_bar_profile_ambient(params, s); }, 1.0,
                                delta, true),
                 false};
        Series p{"pocket envelope", "#d62728",
                 sample_profile([&](double s) { return rho_bar_profile_pocket(params, s); },
                                params.pocket_scale(), delta, false),
                 false};
        const std::vector<RefLine> refs = {{2.0 / kPi, "binding 2/pi"},
                                           {inv.s / tm, "inf, s / t_min"},
                                           {inv.S / tm, "sup, S / t_min"}};
        emit("rho_envelopes.svg",
             render_chart("mean rotation per unit action", kWarpLabel, "rho_bar", {a, p}, refs));
    }

    // 4: every lifted class up to k_max, index against action.
    {
        Series binding{"binding covers", "#555555", {}, true};
        Series lifted{"disk classes", "#1f77b4", {}, true};
        for (int k = 1; k <= k_max; ++k) {
            binding.points.push_back({0.0, static_cast<double>(lift_binding(k).mu_s3)});
            for (const OrbitClass& cls : enumerate_orbit_classes(params, k)) {
                const ReebOrbitClass lift = lift_class(params, cls, k);
                lifted.points.push_back({cls.sigma, static_cast<double>(lift.mu_s3)});
            }
        }
        const std::vector<RefLine> refs = {{3.0, "convexity bound 3"}};
        emit("orbit_classes.svg",
             render_chart("lifted orbit classes through iterate " + std::to_string(k_max),
                          "action sigma", "index on the sphere", {binding, lifted}, refs));
    }

    return paths;
}

}  // namespace diskflow
