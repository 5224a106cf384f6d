#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskflow/radial.hpp"

// Compactly supported area-preserving disk maps assembled from two radial
// pieces.  An ambient twist rotates the inner disk by 2 pi / n, and a deep
// negative twist acts inside n small pockets arranged symmetrically in the
// rotation's plateau region; the composite map cycles the pockets, so pocket
// points feel one application of the pocket twist per step.  Every orbit
// quantity (action, index, mean index, period structure) follows exactly
// from the two radial profiles through this conjugacy bookkeeping; no
// explicit pocket-placement diffeomorphism is needed, and none is built.
//
// Chosen well, the family has prescribed Calabi invariant close to
// -pi^2 (1 - 1/n), all actions inside (-pi + pi/n, pi/n), and periodic
// points whose mean index / action relation is pinched to order nu^2, with
// one distinguished deep orbit attaining the extremes.  verify_map checks
// the complete list of these properties and reports a margin for each.

namespace diskflow {

// Raised when the automatic parameter search cannot satisfy the checks.
struct ParamSearchError : std::runtime_error {
    explicit ParamSearchError(const std::string& what_) : std::runtime_error(what_) {}
};

struct SectorParams {
    int n;         // number of sectors / pockets, >= 2
    double eps;    // requested looseness of the verified windows
    double theta;  // pocket rotation number, in (-n, -n + 1) and below -n + eps
    double eta;    // fraction of the unit disk area covered by the pockets
    double delta;  // cutoff margin of both radial profiles

    SectorParams(int n_, double eps_, double theta_, double eta_, double delta_);

    double nu() const { return theta + n; }
    double pocket_scale() const { return eta / n; }  // squared pocket radius
    double pocket_radius() const;

    // Pockets must fit inside the plateau of the ambient twist.  This is a
    // reported check, not a construction-time error: deliberately
    // inconsistent parameters are allowed in, and verify_map shows which
    // statement their inconsistency breaks.
    bool pockets_fit() const { return eta < 1.0 - 2.0 * delta; }

    CutoffProfile profile() const { return CutoffProfile(delta); }
    RadialHamiltonian ambient() const;  // (pi/n) chi_delta(s)
    RadialHamiltonian pocket() const;   // pi R^2 theta chi_delta(s / R^2)
};

// Automatic parameter selection: nu is derived from eps (and the window
// geometry), then eta -> 1 and delta -> 0 along a dyadic schedule until
// every a-posteriori check passes.  Throws ParamSearchError naming the
// first failing check if the schedule is exhausted.
SectorParams select_params(int n, double eps);

enum class OrbitKind {
    Origin,         // the common fixed point of both factors
    Circle,         // ambient transition circle
    Plateau,        // rigid-rotation region minus the pockets, n | k only
    Exterior,       // outside the support of the map
    PocketCenter,   // deep pocket center, n | k only
    PocketCircle,   // pocket transition circle, n | k only
    PocketPlateau,  // pocket rigid region; occurs only for degenerate theta
    PocketBoundary  // pocket boundary circle, fixed by the pocket twist
};
const char* to_string(OrbitKind kind);

enum class OrbitMultiplicity { Point, CircleFamily, Region };
const char* to_string(OrbitMultiplicity multiplicity);

// One class of period-k points sharing action and index data.  Pocket kinds
// use pocket coordinates for squared_radius; ambient kinds use disk
// coordinates.
struct OrbitClass {
    OrbitKind kind;
    int k;                 // the queried iterate; mu refers to it
    int min_period;        // smallest iterate fixing the class
    double squared_radius; // representative |z|^2 (or pocket |w|^2)
    double sigma;          // action, constant on the class
    int mu;                // index at iterate k
    double mu_mean_per_k;  // mean index per iterate
    OrbitMultiplicity multiplicity;
    // Circle and PocketCircle only: the exact integer k h' / pi the circle
    // solves at iterate k, for the ambient or pocket Hamiltonian
    // respectively.  Index queries at other iterates rescale this integer
    // exactly instead of re-deriving it from the rounded radius.
    int congruence = 0;
};

// All classes of points fixed by the k-th iterate, with data filled in.
// Pocket kinds appear exactly when n divides k.
std::vector<OrbitClass> enumerate_orbit_classes(const SectorParams& params, int k);

// The three per-class quantities, also exposed individually.
double action_sigma(const SectorParams& params, const OrbitClass& cls);
int cz_class(const SectorParams& params, const OrbitClass& cls, int k);
double mean_cz_class(const SectorParams& params, const OrbitClass& cls);

// Calabi invariant of the composite map: ambient part plus n pockets.
double calabi_phi(const SectorParams& params);

// Action as a function of position, by region: ambient branch for points
// outside the pockets (argument |z|^2), pocket branch inside (pocket
// coordinates |w|^2).
double action_profile_ambient(const SectorParams& params, double s);
double action_profile_pocket(const SectorParams& params, double s);

// Mean index per iterate as a function of position, same parametrization.
double mean_index_profile_ambient(const SectorParams& params, double s);
double mean_index_profile_pocket(const SectorParams& params, double s);

// Extrema of a radius-profile function over [0, scale] (optionally with an
// exterior sample), sampled on the plateau, densely across the transition
// in its natural parameter (so arbitrarily thin transitions stay resolved),
// and at the edges.
struct ScanExtrema {
    double min_value;
    double min_arg;
    double max_value;
    double max_arg;
};
ScanExtrema scan_profile(const std::function<double(double)>& fn, const CutoffProfile& profile,
                         double scale, bool include_exterior, int transition_points = 8192);

struct StatementCheck {
    std::string name;
    bool pass;
    double margin;       // distance to the bound; negative when violated
    std::string detail;  // where the worst margin occurs
};

struct MapVerification {
    std::vector<StatementCheck> statements;  // one entry per verified statement
    int k_max;
    bool all_pass() const;
    const StatementCheck* first_failure() const;
};

// Checks the full property list of the family for iterates up to k_max
// (default 8n), closing the remaining iterates with affine-in-k
// certificates and radius-envelope scans.  Inconsistent parameters produce
// failing entries, never exceptions.
MapVerification verify_map(const SectorParams& params, int k_max = 0);

}  // namespace diskflow
