#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diskflow/sphere.hpp"

// Structured run reports.  A verification run is summarized as a single
// document with a pinned key layout: run parameters, the eight map
// statements, the theorem clauses, the contact-form summary, and the flat
// table of lifted orbit classes.  The document serializes to JSON with
// every real written as a 17-significant-digit decimal string, so parsing
// recovers each double bit for bit and two runs with the same inputs
// produce byte-identical files apart from the timestamp.  Text and CSV
// renderings of the same data, a key=value config reader for the command
// line, and the randomized oracle suite live here too.

namespace diskflow {

// One row of the orbit-class table: a lifted class at a fixed iterate.
struct OrbitRow {
    std::string kind;
    int k = 0;
    double sigma = 0.0;
    int mu = 0;
    double mu_mean_per_k = 0.0;
    double T = 0.0;
    int mu_s3 = 0;
    double rho_bar = 0.0;
};

struct RunReport {
    int schema_version = 1;
    std::string timestamp;               // ISO 8601 UTC; not part of equality
    std::optional<SectorParams> params;  // absent in the reference-form report
    std::vector<StatementCheck> mapn_ledger;
    std::vector<StatementCheck> theorem_ledger;
    ContactFormReport contact;
    std::vector<OrbitRow> orbit_classes;

    bool all_pass() const;
};

// Assemble the document for a completed verification.  k_max bounds the
// orbit table: one binding row plus every enumerated class per iterate.
RunReport build_run_report(const TheoremVerification& verification, int k_max);

// The closed-form report for the unperturbed round contact form; its orbit
// table holds the binding covers only and it carries no parameter block.
RunReport build_reference_report(int k_max);

// 17-significant-digit decimal string; strtod recovers the exact double.
std::string real_str(double x);

std::string to_json(const RunReport& report);
RunReport report_from_json(const std::string& text);

std::string to_text(const RunReport& report);
std::string to_csv(const RunReport& report);

// The orbit table alone, one row per class, for the side-car CSV file.
std::string orbit_table_csv(const std::vector<OrbitRow>& rows);

// key=value configuration text: one pair per line, '#' starts a comment,
// blank lines are skipped.  Throws std::runtime_error naming the offending
// line on malformed input.  Keys mirror the long command line flags.
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> parse_config_file(const std::string& path);

// One randomized-oracle check: how many cases ran, the worst residual seen,
// and the tolerance it was held to.  When a requested ceiling is tighter
// than the residual but the built-in tolerance is not, the check is
// infeasible rather than failed: the integrator cannot resolve it.
struct OracleCheck {
    std::string name;
    int cases = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool infeasible = false;
};

struct OracleReport {
    std::uint64_t seed = 0;
    std::vector<OracleCheck> checks;
    bool all_pass() const;
    bool any_infeasible() const;
};

// The independent-route comparison suite: integrated flows against the
// closed-form flow, energy drift, finite-difference linearizations against
// the exact ones, quadrature actions, the Calabi integral against a direct
// quadrature of 2 H omega_0, sampled indices on both curvature branches
// and at the origin, and mapping-torus return times.  tolerance_ceiling,
// when given, tightens every residual check to min(built-in, ceiling).
OracleReport run_oracle_suite(std::uint64_t seed,
                              std::optional<double> tolerance_ceiling = std::nullopt);

std::string to_text(const OracleReport& report);
std::string to_json(const OracleReport& report);
std::string to_csv(const OracleReport& report);

// One cell of a parameter sweep.
struct SweepCell {
    int n = 0;
    double eps = 0.0;
    bool pass = false;
    std::string failure;  // empty when pass, else the first failing clause
    double rho_sys = 0.0;
    double s = 0.0;
    double S = 0.0;
    double Delta = 0.0;
};

struct SweepReport {
    std::vector<SweepCell> cells;
    bool all_pass() const;
};

// Cross product of the given n and eps lists.  A failed parameter search
// becomes a failing cell naming the exhausted check, not an exception, so
// one bad cell does not hide the rest of the grid.
SweepReport run_sweep(const std::vector<int>& ns, const std::vector<double>& eps_list,
                      int k_max = 0);

std::string to_text(const SweepReport& report);
std::string to_json(const SweepReport& report);
std::string to_csv(const SweepReport& report);

}  // namespace diskflow
