// Reeb-flow invariants on the three-sphere induced by the composite disk
// map.  The disk sits as a page of an open book whose binding circle has
// period pi; a point of the disk fixed by the k-th iterate lifts to a
// closed Reeb orbit with period k (pi + sigma), Conley-Zehnder index
// mu + 4k, and mean rotation number (2 + mean/2) / (pi + sigma).  From
// these the toolkit computes the minimal period, the contact volume
// pi^2 + CAL, the systolic ratio, the extremal invariants s, S, and their
// gap Delta, and certifies or refutes dynamical convexity (index >= 3 for
// every closed orbit) with explicit witnesses.

#pragma once

#include <optional>
#include <vector>

#include "diskflow/construction.hpp"

namespace diskflow {

// A closed Reeb orbit class: either an iterated cover of the binding
// circle, or the lift of a disk orbit class.
struct ReebOrbitClass {
    bool binding = false;    // true for covers of the binding circle
    OrbitClass source{};     // the disk class; meaningful when not binding
    int k = 0;               // iterate (cover multiplicity for the binding)
    double T = 0.0;          // period, k (pi + sigma); k pi for the binding
    int mu_s3 = 0;           // index, mu + 4k; 4k - 1 for the binding
    double rho_bar = 0.0;    // mean rotation number per unit action
};

ReebOrbitClass lift_class(const SectorParams& params, const OrbitClass& cls, int k);
ReebOrbitClass lift_binding(int k);

// Mean rotation number as a closed-form function of the squared radius,
// one envelope per map piece; every lifted circle or region class takes
// its rho_bar value on one of these two curves.
double rho_bar_profile_ambient(const SectorParams& params, double s);
double rho_bar_profile_pocket(const SectorParams& params, double s);

// Minimal period over all closed orbits: the binding period pi against
// one pass over each action envelope (pocket classes exist only from
// iterate n on).  Equals pi whenever the action profiles are nonnegative.
double t_min(const SectorParams& params);

// Contact volume pi^2 + CAL of the composite map.
double volume(const SectorParams& params);

// t_min^2 / volume.
double systolic_ratio(const SectorParams& params);

// The extremal invariants: S = t_min * sup rho_bar and s = t_min * inf
// rho_bar over the binding and both radius envelopes (interior extrema
// refined by golden section), with Delta their gap.
struct ContactInvariants {
    double s = 0.0;
    double S = 0.0;
    double Delta = 0.0;
};
ContactInvariants invariants_sS(const SectorParams& params);

// Same extrema restricted to the classes enumerated up to iterate k_max;
// converges to invariants_sS from inside as k_max grows and serves as a
// convergence check on the envelope extrema.
ContactInvariants invariants_sS_enumerated(const SectorParams& params, int k_max);

// Dynamical convexity: every closed orbit must have index at least 3.
// The sweep checks all classes up to k_max; the certificates close the
// gap with per-family affine-in-k index floors valid for every iterate.
struct ConvexityReport {
    bool dynamically_convex = false;
    ReebOrbitClass witness{};  // minimizer over the swept iterates
    std::optional<ReebOrbitClass> negative_witness{};  // an orbit with mu_s3 < 0, when one exists
    std::vector<StatementCheck> certificates;  // one all-iterate floor per orbit family
    int k_max = 0;
    bool all_certified() const;
};
ConvexityReport check_dynamical_convexity(const SectorParams& params, int k_max);

// The assembled invariants of the induced contact form.
struct ContactFormReport {
    double t_min = 0.0;
    double volume = 0.0;
    double rho_sys = 0.0;
    double s = 0.0;
    double S = 0.0;
    double Delta = 0.0;
    bool dynamically_convex = false;
    ReebOrbitClass convexity_witness{};
    std::optional<ReebOrbitClass> negative_index_witness{};
};
ContactFormReport contact_form_report(const SectorParams& params, int k_max);

// Invariants of the unperturbed round contact form, whose closed orbits
// are exactly the covers of the Hopf fibers: every value is closed form.
ContactFormReport reference_contact_report();
ReebOrbitClass reference_orbit(int k);

// End-to-end certification for one (n, eps) cell: selects parameters,
// verifies the eight disk-map statements, then checks every quantitative
// conclusion at the sphere level, one ledger line per clause.
struct TheoremVerification {
    SectorParams params;
    MapVerification map;
    ContactFormReport contact;
    std::vector<StatementCheck> clauses;
    bool all_pass() const;
    const StatementCheck* first_failure() const;
};
TheoremVerification verify_theorems(int n, double eps, int k_max = 0);

// The same ledger on explicitly given parameters, bypassing the search;
// used to probe overridden or deliberately inconsistent parameter sets.
TheoremVerification verify_theorems_with(const SectorParams& params, int k_max = 0);

}  // namespace diskflow
