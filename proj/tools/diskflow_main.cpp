#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "diskflow/plots.hpp"
#include "diskflow/report.hpp"

// Command line front end.  Subcommands: verify (one parameter cell, full
// ledger and report files), oracle (randomized independent-route suite),
// sweep (a grid of cells), reference (the round contact form), and plot
// (SVG views of one cell).  Exit codes: 0 all checks pass, 1 a check
// failed, 2 invalid input or unusable environment, 3 every failure is a
// tolerance-infeasibility, 4 the parameter search itself gave up.

namespace {

namespace fs = std::filesystem;
using diskflow::SectorParams;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitDiagnostic = 4;

struct Options {
    int n = 2;
    double eps = 0.5;
    std::vector<int> n_list = {2};
    std::vector<double> eps_list = {0.5};
    int kmax = 0;  // 0: 8n for cells, 8 for the reference form
    std::optional<double> theta;
    std::optional<double> eta;
    std::optional<double> delta;
    std::uint64_t seed = 1u;
    std::optional<double> tol;
    std::string out;
    std::string format = "json";
    std::string config;
};

int to_int(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        const int parsed = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw std::invalid_argument("config value for " + key + " is not an integer: " + value);
    }
}

double to_real(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        const double parsed = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw std::invalid_argument("config value for " + key + " is not a number: " + value);
    }
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        const unsigned long long parsed = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw std::invalid_argument("config value for " + key + " is not an integer: " + value);
    }
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> parts;
    std::string item;
    for (char c : value) {
        if (c == ',') {
            parts.push_back(item);
            item.clear();
        } else {
            item += c;
        }
    }
    parts.push_back(item);
    return parts;
}

std::vector<int> to_int_list(const std::string& key, const std::string& value) {
    std::vector<int> out;
    for (const std::string& part : split_list(value)) out.push_back(to_int(key, part));
    return out;
}

std::vector<double> to_real_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    for (const std::string& part : split_list(value)) out.push_back(to_real(key, part));
    return out;
}

void check_format(const std::string& format) {
    if (format != "json" && format != "csv" && format != "text")
        throw std::invalid_argument("format must be json, csv, or text, got " + format);
}

// Config files hold the same keys as the long flags.  A key the current
// subcommand has no use for is ignored, so one file can serve several
// subcommands; an unknown key is an error.  Explicit flags win.
struct ConfigBinding {
    std::string key;
    std::function<void(const std::string&)> set;
};

void apply_config(const CLI::App* sub, const std::string& path,
                  const std::vector<ConfigBinding>& bindings) {
    if (path.empty()) return;
    const auto cfg = diskflow::parse_config_file(path);
    static const std::set<std::string> known = {"n",     "eps",  "kmax", "theta", "eta",
                                               "delta", "seed", "out",  "format", "tol"};
    for (const auto& [key, value] : cfg) {
        (void)value;
        if (!known.count(key)) throw std::invalid_argument("config: unknown key " + key);
    }
    for (const ConfigBinding& bind : bindings) {
        const auto it = cfg.find(bind.key);
        if (it == cfg.end()) continue;
        if (sub->count("--" + bind.key) > 0) continue;
        bind.set(it->second);
    }
}

std::string output_dir(const Options& o) {
    if (!o.out.empty()) return o.out;
    if (const char* env = std::getenv("DISKFLOW_OUT"); env != nullptr && env[0] != '\0')
        return env;
    return ".";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream stream(path);
    if (!stream) throw std::runtime_error("cannot write " + path);
    stream << content;
    if (!stream) throw std::runtime_error("short write to " + path);
}

// The report in the requested format plus the flat orbit table.
std::vector<std::string> write_report_files(const diskflow::RunReport& report,
                                            const Options& o) {
    const std::string dir = output_dir(o);
    fs::create_directories(dir);
    std::vector<std::string> paths;
    if (o.format == "json") {
        paths.push_back(dir + "/report.json");
        write_file(paths.back(), diskflow::to_json(report));
    } else if (o.format == "csv") {
        paths.push_back(dir + "/report.csv");
        write_file(paths.back(), diskflow::to_csv(report));
    } else {
        paths.push_back(dir + "/report.txt");
        write_file(paths.back(), diskflow::to_text(report));
    }
    paths.push_back(dir + "/orbit_classes.csv");
    write_file(paths.back(), diskflow::orbit_table_csv(report.orbit_classes));
    return paths;
}

void print_checks(const std::vector<diskflow::StatementCheck>& checks) {
    for (const diskflow::StatementCheck& c : checks) {
        std::printf("  [%s] %s (margin %.6g)\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                    c.margin);
    }
}

void print_contact(const diskflow::ContactFormReport& c) {
    std::printf("contact form: t_min %.12g, volume %.12g, rho_sys %.12g\n", c.t_min, c.volume,
                c.rho_sys);
    std::printf("              s %.12g, S %.12g, Delta %.12g, %s\n", c.s, c.S, c.Delta,
                c.dynamically_convex ? "dynamically convex" : "not dynamically convex");
}

// Missing pieces of an explicit parameter override come from the automatic
// search, so a single overridden knob still yields a full parameter set.
SectorParams resolve_params(const Options& o) {
    if (o.theta && o.eta && o.delta)
        return SectorParams(o.n, o.eps, *o.theta, *o.eta, *o.delta);
    if (!o.theta && !o.eta && !o.delta) return diskflow::select_params(o.n, o.eps);
    const SectorParams base = diskflow::select_params(o.n, o.eps);
    return SectorParams(o.n, o.eps, o.theta.value_or(base.theta), o.eta.value_or(base.eta),
                        o.delta.value_or(base.delta));
}

int cell_kmax(const Options& o, int n) {
    const int kmax = o.kmax > 0 ? o.kmax : 8 * n;
    if (kmax < n)
        throw std::invalid_argument("kmax must be at least n, got " + std::to_string(kmax) +
                                    " for n = " + std::to_string(n));
    return kmax;
}

int run_verify(const Options& o) {
    const SectorParams params = resolve_params(o);
    const int kmax = cell_kmax(o, params.n);
    const diskflow::TheoremVerification verification =
        diskflow::verify_theorems_with(params, kmax);
    const diskflow::RunReport report = diskflow::build_run_report(verification, kmax);

    std::printf("cell n = %d, eps = %g (theta %.12g, eta %.12g, delta %.12g)\n", params.n,
                params.eps, params.theta, params.eta, params.delta);
    std::printf("map statements\n");
    print_checks(report.mapn_ledger);
    std::printf("theorem clauses\n");
    print_checks(report.theorem_ledger);
    print_contact(report.contact);
    for (const std::string& path : write_report_files(report, o))
        std::printf("wrote %s\n", path.c_str());

    if (!report.all_pass()) {
        const diskflow::StatementCheck* f = verification.first_failure();
        if (f != nullptr)
            std::fprintf(stderr, "first failing: %s (margin %.6g)\n%s\n", f->name.c_str(),
                         f->margin, f->detail.c_str());
        std::printf("RESULT: FAIL\n");
        return kExitFail;
    }
    std::printf("RESULT: PASS\n");
    return kExitPass;
}

int run_oracle(const Options& o) {
    const diskflow::OracleReport report = diskflow::run_oracle_suite(o.seed, o.tol);
    const std::string dir = output_dir(o);
    fs::create_directories(dir);
    std::string path;
    if (o.format == "json") {
        path = dir + "/oracle.json";
        write_file(path, diskflow::to_json(report));
    } else if (o.format == "csv") {
        path = dir + "/oracle.csv";
        write_file(path, diskflow::to_csv(report));
    } else {
        path = dir + "/oracle.txt";
        write_file(path, diskflow::to_text(report));
    }
    std::fputs(diskflow::to_text(report).c_str(), stdout);
    std::printf("wrote %s\n", path.c_str());
    if (report.all_pass()) return kExitPass;
    bool genuine = false;
    for (const diskflow::OracleCheck& c : report.checks)
        if (!c.pass && !c.infeasible) genuine = true;
    return genuine ? kExitFail : kExitInfeasible;
}

int run_sweep(const Options& o) {
    if (o.n_list.empty() || o.eps_list.empty())
        throw std::invalid_argument("sweep needs nonempty n and eps lists");
    if (o.kmax > 0) {
        for (int n : o.n_list) (void)cell_kmax(o, n);
    }
    const diskflow::SweepReport report = diskflow::run_sweep(o.n_list, o.eps_list, o.kmax);
    const std::string dir = output_dir(o);
    fs::create_directories(dir);
    std::string path;
    if (o.format == "json") {
        path = dir + "/sweep.json";
        write_file(path, diskflow::to_json(report));
    } else if (o.format == "csv") {
        path = dir + "/sweep.csv";
        write_file(path, diskflow::to_csv(report));
    } else {
        path = dir + "/sweep.txt";
        write_file(path, diskflow::to_text(report));
    }
    std::fputs(diskflow::to_text(report).c_str(), stdout);
    std::printf("wrote %s\n", path.c_str());
    return report.all_pass() ? kExitPass : kExitFail;
}

int run_reference(const Options& o) {
    const int kmax = o.kmax > 0 ? o.kmax : 8;
    const diskflow::RunReport report = diskflow::build_reference_report(kmax);
    std::printf("round contact form, binding covers through iterate %d\n", kmax);
    print_contact(report.contact);
    for (const std::string& path : write_report_files(report, o))
        std::printf("wrote %s\n", path.c_str());
    std::printf("RESULT: PASS\n");
    return kExitPass;
}

int run_plot(const Options& o) {
    const SectorParams params = resolve_params(o);
    const int kmax = cell_kmax(o, params.n);
    const std::string dir = output_dir(o);
    fs::create_directories(dir);
    for (const std::string& path : diskflow::emit_plots(params, dir, kmax))
        std::printf("wrote %s\n", path.c_str());
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"area-preserving disk maps, their Reeb lifts, and the quantitative checks"};
    app.require_subcommand(1);
    Options o;

    const auto add_cell_flags = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "number of sectors, at least 2");
        sub->add_option("--eps", o.eps, "window looseness, positive");
        sub->add_option("--theta", o.theta, "override the pocket rotation number");
        sub->add_option("--eta", o.eta, "override the pocket area fraction");
        sub->add_option("--delta", o.delta, "override the cutoff margin");
    };
    const auto add_output_flags = [&](CLI::App* sub, bool with_format) {
        sub->add_option("--out", o.out, "output directory (default $DISKFLOW_OUT, then .)");
        if (with_format)
            sub->add_option("--format", o.format, "report format: json, csv, or text")
                ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--config", o.config, "key=value config file mirroring the flags");
    };

    CLI::App* verify = app.add_subcommand("verify", "verify one parameter cell end to end");
    add_cell_flags(verify);
    verify->add_option("--kmax", o.kmax, "iterate depth (default 8n)");
    add_output_flags(verify, true);

    CLI::App* oracle = app.add_subcommand("oracle", "randomized independent-route suite");
    oracle->add_option("--seed", o.seed, "random seed for the suite");
    oracle->add_option("--tol", o.tol, "tighten every check to min(built-in, this)");
    add_output_flags(oracle, true);

    CLI::App* sweep = app.add_subcommand("sweep", "verify a grid of cells");
    sweep->add_option("--n", o.n_list, "comma-separated sector counts")->delimiter(',');
    sweep->add_option("--eps", o.eps_list, "comma-separated eps values")->delimiter(',');
    sweep->add_option("--kmax", o.kmax, "iterate depth (default 8n per cell)");
    add_output_flags(sweep, true);

    CLI::App* reference = app.add_subcommand("reference", "the unperturbed round contact form");
    reference->add_option("--kmax", o.kmax, "binding covers to tabulate (default 8)");
    add_output_flags(reference, true);

    CLI::App* plot = app.add_subcommand("plot", "SVG views of one parameter cell");
    add_cell_flags(plot);
    plot->add_option("--kmax", o.kmax, "iterate depth for the scatter (default 8n)");
    add_output_flags(plot, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        const auto set_theta = [&](const std::string& v) { o.theta = to_real("theta", v); };
        const auto set_eta = [&](const std::string& v) { o.eta = to_real("eta", v); };
        const auto set_delta = [&](const std::string& v) { o.delta = to_real("delta", v); };
        const auto set_out = [&](const std::string& v) { o.out = v; };
        const auto set_format = [&](const std::string& v) {
            check_format(v);
            o.format = v;
        };
        const auto set_kmax = [&](const std::string& v) { o.kmax = to_int("kmax", v); };

        if (verify->parsed()) {
            apply_config(verify, o.config,
                         {{"n", [&](const std::string& v) { o.n = to_int("n", v); }},
                          {"eps", [&](const std::string& v) { o.eps = to_real("eps", v); }},
                          {"kmax", set_kmax},
                          {"theta", set_theta},
                          {"eta", set_eta},
                          {"delta", set_delta},
                          {"out", set_out},
                          {"format", set_format}});
            return run_verify(o);
        }
        if (oracle->parsed()) {
            apply_config(oracle, o.config,
                         {{"seed", [&](const std::string& v) { o.seed = to_u64("seed", v); }},
                          {"tol", [&](const std::string& v) { o.tol = to_real("tol", v); }},
                          {"out", set_out},
                          {"format", set_format}});
            return run_oracle(o);
        }
        if (sweep->parsed()) {
            apply_config(sweep, o.config,
                         {{"n", [&](const std::string& v) { o.n_list = to_int_list("n", v); }},
                          {"eps",
                           [&](const std::string& v) { o.eps_list = to_real_list("eps", v); }},
                          {"kmax", set_kmax},
                          {"out", set_out},
                          {"format", set_format}});
            return run_sweep(o);
        }
        if (reference->parsed()) {
            apply_config(reference, o.config,
                         {{"kmax", set_kmax}, {"out", set_out}, {"format", set_format}});
            return run_reference(o);
        }
        if (plot->parsed()) {
            apply_config(plot, o.config,
                         {{"n", [&](const std::string& v) { o.n = to_int("n", v); }},
                          {"eps", [&](const std::string& v) { o.eps = to_real("eps", v); }},
                          {"kmax", set_kmax},
                          {"theta", set_theta},
                          {"eta", set_eta},
                          {"delta", set_delta},
                          {"out", set_out}});
            return run_plot(o);
        }
        std::fprintf(stderr, "no subcommand given\n");
        return kExitInvalid;
    } catch (const diskflow::ParamSearchError& e) {
        std::fprintf(stderr, "parameter search failed: %s\n", e.what());
        return kExitDiagnostic;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalid;
    }
}
