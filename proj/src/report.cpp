#include "diskflow/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "diskflow/oracle.hpp"

namespace diskflow {
namespace {

using ojson = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Compact rendering for the human-readable views; JSON and CSV use the
// full-precision real_str instead.
std::string fmt_g(double x, int digits = 12) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

double real_from(const ojson& v) {
    if (v.is_string()) return std::strtod(v.get<std::string>().c_str(), nullptr);
    return v.get<double>();
}

ojson check_to_json(const StatementCheck& check) {
    ojson j;
    j["name"] = check.name;
    j["pass"] = check.pass;
    j["margin"] = real_str(check.margin);
    j["detail"] = check.detail;
    return j;
}

StatementCheck check_from_json(const ojson& j) {
    StatementCheck check;
    check.name = j.at("name").get<std::string>();
    check.pass = j.at("pass").get<bool>();
    check.margin = real_from(j.at("margin"));
    check.detail = j.at("detail").get<std::string>();
    return check;
}

std::vector<OrbitRow> lifted_rows(const SectorParams& params, int k_max) {
    std::vector<OrbitRow> rows;
    for (int k = 1; k <= k_max; ++k) {
        const ReebOrbitClass bind = lift_binding(k);
        rows.push_back({"binding", k, 0.0, -1, 0.0, bind.T, bind.mu_s3, bind.rho_bar});
        for (const OrbitClass& cls : enumerate_orbit_classes(params, k)) {
            const ReebOrbitClass lift = lift_class(params, cls, k);
            rows.push_back({to_string(cls.kind), k, cls.sigma, cls.mu, cls.mu_mean_per_k,
                            lift.T, lift.mu_s3, lift.rho_bar});
        }
    }
    return rows;
}

void render_checks_text(std::ostringstream& out, const std::vector<StatementCheck>& checks) {
    for (const StatementCheck& c : checks) {
        out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name
            << " (margin " << fmt_g(c.margin, 6) << ")\n";
        if (!c.detail.empty()) out << "         " << c.detail << "\n";
    }
}

void render_checks_csv(std::ostringstream& out, const std::vector<StatementCheck>& checks) {
    out << "name,pass,margin,detail\n";
    for (const StatementCheck& c : checks) {
        out << csv_escape(c.name) << ',' << (c.pass ? "true" : "false") << ','
            << real_str(c.margin) << ',' << csv_escape(c.detail) << '\n';
    }
}

template <typename F>
double simpson(F f, double a, double b, int intervals) {
    if (intervals % 2 != 0) ++intervals;
    const double h = (b - a) / intervals;
    double acc = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

double matrix_gap(const Sp2Matrix& m, const Sp2Matrix& w) {
    return std::max(std::max(std::abs(m.a - w.a), std::abs(m.b - w.b)),
                    std::max(std::abs(m.c - w.c), std::abs(m.d - w.d)));
}

double matrix_mag(const Sp2Matrix& m) {
    return std::max(std::max(std::abs(m.a), std::abs(m.b)),
                    std::max(std::abs(m.c), std::abs(m.d)));
}

std::string trimmed(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::string real_str(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

bool RunReport::all_pass() const {
    const auto ok = [](const StatementCheck& c) { return c.pass; };
    return std::all_of(mapn_ledger.begin(), mapn_ledger.end(), ok) &&
           std::all_of(theorem_ledger.begin(), theorem_ledger.end(), ok);
}

RunReport build_run_report(const TheoremVerification& verification, int k_max) {
    if (k_max < 1) throw std::invalid_argument("build_run_report: k_max must be positive");
    RunReport report;
    report.timestamp = utc_now();
    report.params = verification.params;
    report.mapn_ledger = verification.map.statements;
    report.theorem_ledger = verification.clauses;
    report.contact = verification.contact;
    report.orbit_classes = lifted_rows(verification.params, k_max);
    return report;
}

RunReport build_reference_report(int k_max) {
    if (k_max < 1) throw std::invalid_argument("build_reference_report: k_max must be positive");
    RunReport report;
    report.timestamp = utc_now();
    report.contact = reference_contact_report();
    for (int k = 1; k <= k_max; ++k) {
        const ReebOrbitClass orbit = reference_orbit(k);
        report.orbit_classes.push_back(
            {"binding", k, 0.0, -1, 0.0, orbit.T, orbit.mu_s3, orbit.rho_bar});
    }
    return report;
}

std::string to_json(const RunReport& report) {
    ojson j;
    j["schema_version"] = report.schema_version;
    j["timestamp"] = report.timestamp;
    if (report.params) {
        ojson p;
        p["n"] = report.params->n;
        p["eps"] = real_str(report.params->eps);
        p["theta"] = real_str(report.params->theta);
        p["eta"] = real_str(report.params->eta);
        p["delta"] = real_str(report.params->delta);
        p["nu"] = real_str(report.params->nu());
        p["R"] = real_str(report.params->pocket_radius());
        j["params"] = p;
    } else {
        j["params"] = nullptr;
    }
    j["mapn_ledger"] = ojson::array();
    for (const StatementCheck& c : report.mapn_ledger) j["mapn_ledger"].push_back(check_to_json(c));
    j["theorem_ledger"] = ojson::array();
    for (const StatementCheck& c : report.theorem_ledger)
        j["theorem_ledger"].push_back(check_to_json(c));
    ojson c;
    c["t_min"] = real_str(report.contact.t_min);
    c["volume"] = real_str(report.contact.volume);
    c["rho_sys"] = real_str(report.contact.rho_sys);
    c["s"] = real_str(report.contact.s);
    c["S"] = real_str(report.contact.S);
    c["Delta"] = real_str(report.contact.Delta);
    c["dynamically_convex"] = report.contact.dynamically_convex;
    j["contact_report"] = c;
    j["orbit_classes"] = ojson::array();
    for (const OrbitRow& row : report.orbit_classes) {
        ojson r;
        r["kind"] = row.kind;
        r["k"] = row.k;
        r["sigma"] = real_str(row.sigma);
        r["mu"] = row.mu;
        r["mu_mean_per_k"] = real_str(row.mu_mean_per_k);
        r["T"] = real_str(row.T);
        r["mu_s3"] = row.mu_s3;
        r["rho_bar"] = real_str(row.rho_bar);
        j["orbit_classes"].push_back(r);
    }
    return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
    const ojson j = ojson::parse(text);
    RunReport report;
    report.schema_version = j.at("schema_version").get<int>();
    if (report.schema_version != 1)
        throw std::runtime_error("report_from_json: unsupported schema_version " +
                                 std::to_string(report.schema_version));
    report.timestamp = j.at("timestamp").get<std::string>();
    const ojson& p = j.at("params");
    if (!p.is_null()) {
        report.params.emplace(p.at("n").get<int>(), real_from(p.at("eps")),
                              real_from(p.at("theta")), real_from(p.at("eta")),
                              real_from(p.at("delta")));
    }
    for (const ojson& e : j.at("mapn_ledger")) report.mapn_ledger.push_back(check_from_json(e));
    for (const ojson& e : j.at("theorem_ledger"))
        report.theorem_ledger.push_back(check_from_json(e));
    const ojson& c = j.at("contact_report");
    report.contact.t_min = real_from(c.at("t_min"));
    report.contact.volume = real_from(c.at("volume"));
    report.contact.rho_sys = real_from(c.at("rho_sys"));
    report.contact.s = real_from(c.at("s"));
    report.contact.S = real_from(c.at("S"));
    report.contact.Delta = real_from(c.at("Delta"));
    report.contact.dynamically_convex = c.at("dynamically_convex").get<bool>();
    for (const ojson& e : j.at("orbit_classes")) {
        OrbitRow row;
        row.kind = e.at("kind").get<std::string>();
        row.k = e.at("k").get<int>();
        row.sigma = real_from(e.at("sigma"));
        row.mu = e.at("mu").get<int>();
        row.mu_mean_per_k = real_from(e.at("mu_mean_per_k"));
        row.T = real_from(e.at("T"));
        row.mu_s3 = e.at("mu_s3").get<int>();
        row.rho_bar = real_from(e.at("rho_bar"));
        report.orbit_classes.push_back(row);
    }
    return report;
}

std::string to_text(const RunReport& report) {
    std::ostringstream out;
    out << "disk map verification report (schema " << report.schema_version << ")\n";
    out << "generated " << report.timestamp << "\n\n";
    if (report.params) {
        const SectorParams& p = *report.params;
        out << "parameters\n";
        out << "  n      " << p.n << "\n";
        out << "  eps    " << fmt_g(p.eps) << "\n";
        out << "  theta  " << fmt_g(p.theta) << "\n";
        out << "  eta    " << fmt_g(p.eta) << "\n";
        out << "  delta  " << fmt_g(p.delta) << "\n";
        out << "  nu     " << fmt_g(p.nu()) << "\n";
        out << "  R      " << fmt_g(p.pocket_radius()) << "\n\n";
        out << "map statements\n";
        render_checks_text(out, report.mapn_ledger);
        out << "\ntheorem clauses\n";
        render_checks_text(out, report.theorem_ledger);
        out << "\n";
    } else {
        out << "reference round contact form\n\n";
    }
    const ContactFormReport& c = report.contact;
    out << "contact form\n";
    out << "  t_min               " << fmt_g(c.t_min) << "\n";
    out << "  volume              " << fmt_g(c.volume) << "\n";
    out << "  rho_sys             " << fmt_g(c.rho_sys) << "\n";
    out << "  s                   " << fmt_g(c.s) << "\n";
    out << "  S                   " << fmt_g(c.S) << "\n";
    out << "  Delta               " << fmt_g(c.Delta) << "\n";
    out << "  dynamically_convex  " << (c.dynamically_convex ? "yes" : "no") << "\n\n";
    out << "orbit classes (" << report.orbit_classes.size() << " rows)\n";
    char line[200];
    std::snprintf(line, sizeof line, "  %-16s %4s %10s %6s %10s %12s %6s %10s\n", "kind", "k",
                  "sigma", "mu", "mean/k", "T", "mu_s3", "rho_bar");
    out << line;
    for (const OrbitRow& row : report.orbit_classes) {
        std::snprintf(line, sizeof line, "  %-16s %4d %10.6f %6d %10.6f %12.8f %6d %10.6f\n",
                      row.kind.c_str(), row.k, row.sigma, row.mu, row.mu_mean_per_k, row.T,
                      row.mu_s3, row.rho_bar);
        out << line;
    }
    return out.str();
}

std::string to_csv(const RunReport& report) {
    std::ostringstream out;
    out << "section,key,value\n";
    out << "meta,schema_version," << report.schema_version << "\n";
    out << "meta,timestamp," << report.timestamp << "\n";
    if (report.params) {
        const SectorParams& p = *report.params;
        out << "params,n," << p.n << "\n";
        out << "params,eps," << real_str(p.eps) << "\n";
        out << "params,theta," << real_str(p.theta) << "\n";
        out << "params,eta," << real_str(p.eta) << "\n";
        out << "params,delta," << real_str(p.delta) << "\n";
        out << "params,nu," << real_str(p.nu()) << "\n";
        out << "params,R," << real_str(p.pocket_radius()) << "\n";
    }
    out << "contact,t_min," << real_str(report.contact.t_min) << "\n";
    out << "contact,volume," << real_str(report.contact.volume) << "\n";
    out << "contact,rho_sys," << real_str(report.contact.rho_sys) << "\n";
    out << "contact,s," << real_str(report.contact.s) << "\n";
    out << "contact,S," << real_str(report.contact.S) << "\n";
    out << "contact,Delta," << real_str(report.contact.Delta) << "\n";
    out << "contact,dynamically_convex," << (report.contact.dynamically_convex ? "true" : "false")
        << "\n";
    out << "\n# map statements\n";
    render_checks_csv(out, report.mapn_ledger);
    out << "\n# theorem clauses\n";
    render_checks_csv(out, report.theorem_ledger);
    out << "\n# orbit classes\n";
    out << orbit_table_csv(report.orbit_classes);
    return out.str();
}

std::string orbit_table_csv(const std::vector<OrbitRow>& rows) {
    std::ostringstream out;
    out << "kind,k,sigma,mu,mu_mean_per_k,T,mu_s3,rho_bar\n";
    for (const OrbitRow& row : rows) {
        out << row.kind << ',' << row.k << ',' << real_str(row.sigma) << ',' << row.mu << ','
            << real_str(row.mu_mean_per_k) << ',' << real_str(row.T) << ',' << row.mu_s3 << ','
            << real_str(row.rho_bar) << '\n';
    }
    return out.str();
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected key=value");
        const std::string key = trimmed(line.substr(0, eq));
        const std::string value = trimmed(line.substr(eq + 1));
        if (key.empty())
            throw std::runtime_error("config line " + std::to_string(lineno) + ": empty key");
        out[key] = value;
    }
    return out;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

bool OracleReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const OracleCheck& c) { return c.pass; });
}

bool OracleReport::any_infeasible() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const OracleCheck& c) { return c.infeasible; });
}

OracleReport run_oracle_suite(std::uint64_t seed, std::optional<double> tolerance_ceiling) {
    OracleReport out;
    out.seed = seed;

    const auto record = [&](std::string name, int cases, double residual, double built_in) {
        OracleCheck check;
        check.name = std::move(name);
        check.cases = cases;
        check.max_residual = residual;
        check.tolerance =
            tolerance_ceiling ? std::min(built_in, *tolerance_ceiling) : built_in;
        check.pass = residual <= check.tolerance;
        check.infeasible = !check.pass && residual <= built_in;
        out.checks.push_back(std::move(check));
    };

    // Randomized Hamiltonians: integrated flow, energy drift, linearization,
    // and action, each against its closed form; Calabi against a direct
    // quadrature of 2 H omega_0 in the radius variable.
    std::mt19937 rng(static_cast<std::uint32_t>(seed ^ (seed >> 32)));
    std::uniform_real_distribution<double> amp_dist(-5.0, 5.0);
    std::uniform_real_distribution<double> scale_dist(0.3, 1.0);
    std::uniform_real_distribution<double> delta_dist(0.05, 0.35);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    double flow_res = 0.0, energy_res = 0.0, lin_res = 0.0, det_res = 0.0;
    double action_res = 0.0, calabi_res = 0.0;
    const int trials = 100;
    for (int trial = 0; trial < trials; ++trial) {
        const double scale = scale_dist(rng);
        const RadialHamiltonian ham(amp_dist(rng), scale, CutoffProfile(delta_dist(rng)));
        const HamiltonianField field = radial_field(ham);

        const double radius = std::sqrt(1.3 * scale) * unit(rng);
        const double phase = 2.0 * kPi * unit(rng);
        const Vec2 z{radius * std::cos(phase), radius * std::sin(phase)};

        const Vec2 closed = radial_flow(ham, z, 1.0);
        const Vec2 numeric = integrate_flow(field, 1.0, z);
        flow_res = std::max(flow_res, std::max(std::abs(numeric[0] - closed[0]),
                                               std::abs(numeric[1] - closed[1])));
        energy_res = std::max(energy_res, std::abs(ham.value(numeric) - ham.value(z)));

        const double t = 0.3 + 0.7 * unit(rng);
        const Sp2Matrix fd = fd_linearization(field, t, z);
        const Sp2Matrix exact = radial_dflow(ham, z, t);
        lin_res = std::max(lin_res,
                           matrix_gap(fd, exact) / std::max(1.0, matrix_mag(exact)));
        det_res = std::max(det_res, std::abs(fd.det() - 1.0));

        action_res = std::max(action_res,
                              std::abs(quadrature_action(field, z) - radial_action(ham, z)));

        const double direct = 4.0 * kPi *
            simpson([&ham](double r) { return r * ham.h(r * r); }, 0.0,
                    std::sqrt(ham.scale), 1 << 13);
        calabi_res = std::max(calabi_res,
                              std::abs(calabi(ham) - direct) / std::max(1.0, std::abs(direct)));
    }
    record("flow agreement", trials, flow_res, 1e-9);
    record("energy conservation", trials, energy_res, 1e-9);
    record("linearization agreement", trials, lin_res, 1e-5);
    record("linearization determinant", trials, det_res, 1e-5);
    record("action agreement", trials, action_res, 1e-8);
    record("calabi agreement", trials, calabi_res, 1e-8);

    // Sampled indices on both curvature branches, the flat branch, and the
    // origin, against the closed form.  Integer data, so the residual is
    // zero or the check fails outright.
    {
        int cases = 0;
        double index_res = 0.0;
        const auto run_case = [&](const RadialHamiltonian& ham, const HamiltonianField& field,
                                  int k, const Vec2& z) {
            const int closed = cz_fixed_point(ham, k, z);
            const int sampled = sampled_cz(field, k, z);
            index_res = std::max(index_res, static_cast<double>(std::abs(sampled - closed)));
            ++cases;
        };
        const CutoffProfile profile(0.15);
        for (int n = 2; n <= 4; ++n) {
            const RadialHamiltonian hplus(kPi / n, 1.0, profile);
            const HamiltonianField field = radial_field(hplus);
            for (int k = 1; k <= 3; ++k) run_case(hplus, field, k, {0.0, 0.0});
        }
        const RadialHamiltonian convex(kPi / 2, 1.0, profile);
        const HamiltonianField convex_field = radial_field(convex);
        for (int k : {3, 5, 7}) {
            for (double s : fixed_point_radii(convex, k).squared_radii)
                run_case(convex, convex_field, k, {std::sqrt(s), 0.0});
        }
        const double theta = -1.5, r2 = 0.5;
        const RadialHamiltonian concave(kPi * r2 * theta, r2, profile);
        const HamiltonianField concave_field = radial_field(concave);
        for (int k : {2, 4}) {
            run_case(concave, concave_field, k, {0.4, 0.0});
            for (double s : fixed_point_radii(concave, k).squared_radii)
                run_case(concave, concave_field, k, {std::sqrt(s), 0.0});
        }
        record("sampled index", cases, index_res, 0.0);
    }

    // Mapping-torus return times across a radial sweep through plateau,
    // transition, and exterior.
    {
        const RadialHamiltonian hplus(kPi / 3, 1.0, CutoffProfile(0.1));
        const IntegratorConfig cfg{1e-4, 4, 1e-9};
        double sweep_res = 0.0;
        int cases = 0;
        for (int i = 0; i < 20; ++i) {
            const double r = 1.25 * i / 19.0;
            const Vec2 z{r, 0.0};
            double gap = std::numeric_limits<double>::infinity();
            try {
                const double measured = return_time_check(hplus, z, cfg);
                gap = std::abs(measured - (radial_action(hplus, z) + kPi));
            } catch (const std::exception&) {
                // Leave the residual infinite; the check fails visibly.
            }
            sweep_res = std::max(sweep_res, gap);
            ++cases;
        }
        record("return time", cases, sweep_res, 1e-6);
    }

    return out;
}

namespace {

const char* oracle_status(const OracleCheck& c) {
    if (c.pass) return "PASS";
    return c.infeasible ? "INFEASIBLE" : "FAIL";
}

}  // namespace

std::string to_text(const OracleReport& report) {
    std::ostringstream out;
    out << "oracle suite, seed " << report.seed << "\n";
    char line[200];
    for (const OracleCheck& c : report.checks) {
        std::snprintf(line, sizeof line, "  [%-10s] %-26s cases %4d  max residual %-12.5g tolerance %g\n",
                      oracle_status(c), c.name.c_str(), c.cases, c.max_residual, c.tolerance);
        out << line;
    }
    out << (report.all_pass() ? "all checks passed\n"
            : report.any_infeasible() ? "some checks infeasible at the requested tolerance\n"
                                      : "some checks failed\n");
    return out.str();
}

std::string to_json(const OracleReport& report) {
    ojson j;
    j["seed"] = report.seed;
    j["checks"] = ojson::array();
    for (const OracleCheck& c : report.checks) {
        ojson e;
        e["name"] = c.name;
        e["cases"] = c.cases;
        e["max_residual"] = real_str(c.max_residual);
        e["tolerance"] = real_str(c.tolerance);
        e["pass"] = c.pass;
        e["infeasible"] = c.infeasible;
        j["checks"].push_back(e);
    }
    return j.dump(2) + "\n";
}

std::string to_csv(const OracleReport& report) {
    std::ostringstream out;
    out << "name,cases,max_residual,tolerance,status\n";
    for (const OracleCheck& c : report.checks) {
        out << csv_escape(c.name) << ',' << c.cases << ',' << real_str(c.max_residual) << ','
            << real_str(c.tolerance) << ',' << oracle_status(c) << '\n';
    }
    return out.str();
}

bool SweepReport::all_pass() const {
    return std::all_of(cells.begin(), cells.end(),
                       [](const SweepCell& c) { return c.pass; });
}

SweepReport run_sweep(const std::vector<int>& ns, const std::vector<double>& eps_list,
                      int k_max) {
    SweepReport out;
    for (int n : ns) {
        for (double eps : eps_list) {
            SweepCell cell;
            cell.n = n;
            cell.eps = eps;
            try {
                const TheoremVerification v = verify_theorems(n, eps, k_max);
                cell.pass = v.all_pass();
                if (const StatementCheck* f = v.first_failure()) cell.failure = f->name;
                cell.rho_sys = v.contact.rho_sys;
                cell.s = v.contact.s;
                cell.S = v.contact.S;
                cell.Delta = v.contact.Delta;
            } catch (const ParamSearchError& err) {
                cell.pass = false;
                cell.failure = err.what();
            }
            out.cells.push_back(cell);
        }
    }
    return out;
}

std::string to_text(const SweepReport& report) {
    std::ostringstream out;
    out << "parameter sweep, " << report.cells.size() << " cells\n";
    char line[260];
    std::snprintf(line, sizeof line, "  %3s %10s %6s %12s %12s %12s %12s  %s\n", "n", "eps",
                  "result", "rho_sys", "s", "S", "Delta", "failure");
    out << line;
    for (const SweepCell& c : report.cells) {
        std::snprintf(line, sizeof line, "  %3d %10g %6s %12.8f %12.8f %12.8f %12.8f  %s\n", c.n,
                      c.eps, c.pass ? "pass" : "FAIL", c.rho_sys, c.s, c.S, c.Delta,
                      c.failure.c_str());
        out << line;
    }
    return out.str();
}

std::string to_json(const SweepReport& report) {
    ojson j;
    j["cells"] = ojson::array();
    for (const SweepCell& c : report.cells) {
        ojson e;
        e["n"] = c.n;
        e["eps"] = real_str(c.eps);
        e["pass"] = c.pass;
        e["failure"] = c.failure;
        e["rho_sys"] = real_str(c.rho_sys);
        e["s"] = real_str(c.s);
        e["S"] = real_str(c.S);
        e["Delta"] = real_str(c.Delta);
        j["cells"].push_back(e);
    }
    return j.dump(2) + "\n";
}

std::string to_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "n,eps,pass,rho_sys,s,S,Delta,failure\n";
    for (const SweepCell& c : report.cells) {
        out << c.n << ',' << real_str(c.eps) << ',' << (c.pass ? "true" : "false") << ','
            << real_str(c.rho_sys) << ',' << real_str(c.s) << ',' << real_str(c.S) << ','
            << real_str(c.Delta) << ',' << csv_escape(c.failure) << '\n';
    }
    return out.str();
}

}  // namespace diskflow
