#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "test_harness.hpp"

// Black-box checks of the command line binary: every subcommand, every exit
// code, the report files, config handling, and the output directory
// environment variable.  The binary path arrives as argv[1].

namespace {

using ojson = nlohmann::ordered_json;

std::string g_binary;
std::string g_root;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool file_exists(const std::string& path) {
    std::ifstream in(path);
    return static_cast<bool>(in);
}

// Runs the binary through the shell so environment prefixes work; captures
// both streams and the exit code.
RunResult run(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const std::string out_path = g_root + "/stream_out_" + std::to_string(counter);
    const std::string err_path = g_root + "/stream_err_" + std::to_string(counter);
    ++counter;
    const std::string cmd = env_prefix + "\"" + g_binary + "\" " + args + " > " + out_path +
                            " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    RunResult result;
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

void usage_tests() {
    const RunResult none = run("");
    testing::check_eq(none.exit_code, 2, "no subcommand exits 2");

    const RunResult bogus = run("verify --bogus 1");
    testing::check_eq(bogus.exit_code, 2, "unknown flag exits 2");

    const RunResult help = run("--help");
    testing::check_eq(help.exit_code, 0, "help exits 0");
    testing::check(contains(help.out, "verify") && contains(help.out, "oracle") &&
                       contains(help.out, "sweep") && contains(help.out, "reference") &&
                       contains(help.out, "plot"),
                   "help lists the subcommands");
}

void verify_tests() {
    const std::string dir = g_root + "/verify";
    const RunResult r = run("verify --n 2 --eps 0.5 --out " + dir);
    testing::check_eq(r.exit_code, 0, "verify passes on the first cell");
    testing::check(contains(r.out, "RESULT: PASS"), "verify prints the verdict");
    testing::check(file_exists(dir + "/report.json"), "verify writes report.json");
    testing::check(file_exists(dir + "/orbit_classes.csv"), "verify writes the orbit table");

    const ojson j = ojson::parse(slurp(dir + "/report.json"));
    testing::check_eq(static_cast<long long>(j.at("mapn_ledger").size()), 8,
                      "report holds eight map statements");
    int failed = 0;
    for (const ojson& e : j.at("mapn_ledger"))
        if (!e.at("pass").get<bool>()) ++failed;
    for (const ojson& e : j.at("theorem_ledger"))
        if (!e.at("pass").get<bool>()) ++failed;
    testing::check_eq(failed, 0, "all ledger entries pass");

    const std::string csv_head = slurp(dir + "/orbit_classes.csv").substr(0, 48);
    testing::check(contains(csv_head, "kind,k,sigma,mu,mu_mean_per_k,T,mu_s3,rho_bar"),
                   "orbit table header pinned");

    // A second run differs only in its timestamp.
    const std::string dir2 = g_root + "/verify_again";
    run("verify --n 2 --eps 0.5 --out " + dir2);
    ojson a = ojson::parse(slurp(dir + "/report.json"));
    ojson b = ojson::parse(slurp(dir2 + "/report.json"));
    a.erase("timestamp");
    b.erase("timestamp");
    testing::check(a.dump() == b.dump(), "reruns are deterministic modulo timestamp");

    const std::string text_dir = g_root + "/verify_text";
    const RunResult rt = run("verify --n 2 --eps 0.5 --format text --out " + text_dir);
    testing::check_eq(rt.exit_code, 0, "text format accepted");
    testing::check(file_exists(text_dir + "/report.txt"), "text format writes report.txt");

    const std::string csv_dir = g_root + "/verify_csv";
    const RunResult rc = run("verify --n 2 --eps 0.5 --format csv --out " + csv_dir);
    testing::check_eq(rc.exit_code, 0, "csv format accepted");
    testing::check(slurp(csv_dir + "/report.csv").rfind("section,key,value\n", 0) == 0,
                   "csv format writes the section table");

    const RunResult bad_fmt = run("verify --format yaml");
    testing::check_eq(bad_fmt.exit_code, 2, "unknown format exits 2");

    const RunResult small_k = run("verify --n 3 --eps 0.25 --kmax 2");
    testing::check_eq(small_k.exit_code, 2, "kmax below n exits 2");
    testing::check(contains(small_k.err, "kmax"), "kmax error names the flag");

    const RunResult bad_n = run("verify --n 1 --eps 0.5");
    testing::check_eq(bad_n.exit_code, 2, "n below 2 exits 2");
}

void failure_mode_tests() {
    const std::string dir = g_root + "/forced";
    const RunResult forced =
        run("verify --n 2 --eps 0.5 --delta 0.4 --eta 0.99 --out " + dir);
    testing::check_eq(forced.exit_code, 1, "inconsistent overrides exit 1");
    testing::check(contains(forced.err, "first failing:"),
                   "failure names the first failing statement");
    testing::check(contains(forced.out, "RESULT: FAIL"), "failure verdict printed");
    testing::check(file_exists(dir + "/report.json"), "failing run still writes its report");
    const ojson j = ojson::parse(slurp(dir + "/report.json"));
    int failed = 0;
    for (const ojson& e : j.at("mapn_ledger"))
        if (!e.at("pass").get<bool>()) ++failed;
    testing::check(failed > 0, "failing statements recorded in the report");

    const RunResult exhausted = run("verify --n 2 --eps 1e-9");
    testing::check_eq(exhausted.exit_code, 4, "exhausted parameter search exits 4");
    testing::check(contains(exhausted.err, "parameter search failed"),
                   "search failure is diagnosed");
    testing::check(contains(exhausted.err, "first failing check"),
                   "search failure names the first failing check");
}

void reference_tests() {
    const std::string dir = g_root + "/reference";
    const RunResult r = run("reference --out " + dir);
    testing::check_eq(r.exit_code, 0, "reference exits 0");
    const ojson j = ojson::parse(slurp(dir + "/report.json"));
    testing::check(j.at("params").is_null(), "reference report has no params");
    testing::check_eq(static_cast<long long>(j.at("orbit_classes").size()), 8,
                      "reference tabulates eight covers by default");
    testing::check(j.at("contact_report").at("s").get<std::string>() == "2" &&
                       j.at("contact_report").at("S").get<std::string>() == "2" &&
                       j.at("contact_report").at("Delta").get<std::string>() == "0",
                   "reference invariants exact");
}

void oracle_tests() {
    const std::string dir = g_root + "/oracle";
    const RunResult r = run("oracle --seed 4242 --out " + dir);
    testing::check_eq(r.exit_code, 0, "oracle suite passes");
    testing::check(contains(r.out, "all checks passed"), "oracle verdict printed");
    const ojson j = ojson::parse(slurp(dir + "/oracle.json"));
    testing::check_eq(j.at("seed").get<long long>(), 4242, "seed recorded");
    int failed = 0;
    for (const ojson& e : j.at("checks"))
        if (!e.at("pass").get<bool>()) ++failed;
    testing::check_eq(failed, 0, "every oracle check passes");

    const RunResult tight = run("oracle --seed 4242 --tol 1e-14 --out " + g_root + "/oracle_t");
    testing::check_eq(tight.exit_code, 3, "unreachable tolerance exits 3");
    testing::check(contains(tight.out, "INFEASIBLE"), "infeasible checks labeled");
}

void sweep_tests() {
    const std::string dir = g_root + "/sweep";
    const RunResult r = run("sweep --n 2,3 --eps 0.25 --format csv --out " + dir);
    testing::check_eq(r.exit_code, 0, "sweep over two cells passes");
    const std::string csv = slurp(dir + "/sweep.csv");
    testing::check(contains(csv, "\n2,") && contains(csv, "\n3,"), "sweep covers both cells");

    const RunResult bad = run("sweep --n 2 --eps 1e-9 --out " + g_root + "/sweep_bad");
    testing::check_eq(bad.exit_code, 1, "sweep with an exhausted cell exits 1");
}

void config_tests() {
    const std::string cfg = g_root + "/run.cfg";
    {
        std::ofstream out(cfg);
        out << "n = 3\neps = 0.25\nformat = text   # report format\nkmax = 9\n";
    }
    const std::string dir = g_root + "/config_run";
    const RunResult r = run("verify --config " + cfg + " --out " + dir);
    testing::check_eq(r.exit_code, 0, "config-driven verify passes");
    testing::check(contains(r.out, "cell n = 3, eps = 0.25"), "config values applied");
    testing::check(file_exists(dir + "/report.txt"), "config format applied");

    const std::string dir2 = g_root + "/config_override";
    const RunResult r2 = run("verify --config " + cfg + " --n 2 --out " + dir2);
    testing::check_eq(r2.exit_code, 0, "flag plus config verify passes");
    testing::check(contains(r2.out, "cell n = 2, eps = 0.25"), "explicit flag beats config");

    const std::string bad_cfg = g_root + "/bad.cfg";
    {
        std::ofstream out(bad_cfg);
        out << "bogus = 1\n";
    }
    const RunResult rb = run("verify --config " + bad_cfg);
    testing::check_eq(rb.exit_code, 2, "unknown config key exits 2");

    const RunResult missing = run("verify --config " + g_root + "/absent.cfg");
    testing::check_eq(missing.exit_code, 2, "missing config file exits 2");
}

void env_tests() {
    const std::string dir = g_root + "/env_out";
    const RunResult r = run("reference", "DISKFLOW_OUT=" + dir + " ");
    testing::check_eq(r.exit_code, 0, "reference honors the environment directory");
    testing::check(file_exists(dir + "/report.json"), "files land in DISKFLOW_OUT");

    const std::string flag_dir = g_root + "/env_beaten";
    const RunResult r2 = run("reference --out " + flag_dir, "DISKFLOW_OUT=" + dir + " ");
    testing::check_eq(r2.exit_code, 0, "explicit out accepted with environment set");
    testing::check(file_exists(flag_dir + "/report.json"), "explicit out beats DISKFLOW_OUT");
}

void plot_tests() {
    const std::string dir = g_root + "/plots";
    const RunResult r = run("plot --n 2 --eps 0.5 --out " + dir);
    testing::check_eq(r.exit_code, 0, "plot exits 0");
    for (const char* name : {"cutoff_profile.svg", "hamiltonian_profiles.svg",
                             "rho_envelopes.svg", "orbit_classes.svg"}) {
        const std::string path = dir + "/" + name;
        testing::check(file_exists(path), std::string("plot writes ") + name);
        testing::check(slurp(path).rfind("<svg", 0) == 0, std::string(name) + " is svg");
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path to diskflow binary>\n");
        return 2;
    }
    g_binary = argv[1];

    char tmpl[] = "/tmp/diskflow_cli_XXXXXX";
    if (mkdtemp(tmpl) == nullptr) {
        std::fprintf(stderr, "cannot create scratch directory\n");
        return 2;
    }
    g_root = tmpl;

    usage_tests();
    verify_tests();
    failure_mode_tests();
    reference_tests();
    oracle_tests();
    sweep_tests();
    config_tests();
    env_tests();
    plot_tests();
    return testing::finish("test_cli");
}
