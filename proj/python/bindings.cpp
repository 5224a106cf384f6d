#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diskflow/construction.hpp"
#include "diskflow/report.hpp"
#include "diskflow/sphere.hpp"

// Python veneer over the closed-form layer: parameter selection, the map
// and theorem ledgers, contact form invariants, orbit class enumeration,
// and the serialized run report.  The numerical oracle and the sampled
// index machinery stay C++-only; their tests live with the core.

namespace py = pybind11;
using namespace diskflow;

PYBIND11_MODULE(_diskflow, m) {
    m.doc() = "Area-preserving disk maps with prescribed Calabi invariant and "
              "their Reeb lifts: construction, invariants, and certification.";

    py::enum_<OrbitKind>(m, "OrbitKind")
        .value("Origin", OrbitKind::Origin)
        .value("Circle", OrbitKind::Circle)
        .value("Plateau", OrbitKind::Plateau)
        .value("Exterior", OrbitKind::Exterior)
        .value("PocketCenter", OrbitKind::PocketCenter)
        .value("PocketCircle", OrbitKind::PocketCircle)
        .value("PocketPlateau", OrbitKind::PocketPlateau)
        .value("PocketBoundary", OrbitKind::PocketBoundary);

    py::enum_<OrbitMultiplicity>(m, "OrbitMultiplicity")
        .value("Point", OrbitMultiplicity::Point)
        .value("CircleFamily", OrbitMultiplicity::CircleFamily)
        .value("Region", OrbitMultiplicity::Region);

    py::class_<SectorParams>(m, "SectorParams")
        .def(py::init<int, double, double, double, double>(), py::arg("n"), py::arg("eps"),
             py::arg("theta"), py::arg("eta"), py::arg("delta"))
        .def_readonly("n", &SectorParams::n)
        .def_readonly("eps", &SectorParams::eps)
        .def_readonly("theta", &SectorParams::theta)
        .def_readonly("eta", &SectorParams::eta)
        .def_readonly("delta", &SectorParams::delta)
        .def_property_readonly("nu", &SectorParams::nu)
        .def_property_readonly("pocket_scale", &SectorParams::pocket_scale)
        .def_property_readonly("pocket_radius", &SectorParams::pocket_radius)
        .def("pockets_fit", &SectorParams::pockets_fit)
        .def("__repr__", [](const SectorParams& p) {
            return "SectorParams(n=" + std::to_string(p.n) + ", eps=" + std::to_string(p.eps) +
                   ", theta=" + std::to_string(p.theta) + ", eta=" + std::to_string(p.eta) +
                   ", delta=" + std::to_string(p.delta) + ")";
        });

    py::class_<StatementCheck>(m, "StatementCheck")
        .def_readonly("name", &StatementCheck::name)
        .def_readonly("passed", &StatementCheck::pass)
        .def_readonly("margin", &StatementCheck::margin)
        .def_readonly("detail", &StatementCheck::detail)
        .def("__repr__", [](const StatementCheck& s) {
            return "StatementCheck(" + s.name + (s.pass ? ": pass, margin " : ": FAIL, margin ") +
                   std::to_string(s.margin) + ")";
        });

    py::class_<MapVerification>(m, "MapVerification")
        .def_readonly("statements", &MapVerification::statements)
        .def_readonly("k_max", &MapVerification::k_max)
        .def("all_pass", &MapVerification::all_pass);

    py::class_<OrbitClass>(m, "OrbitClass")
        .def_readonly("kind", &OrbitClass::kind)
        .def_readonly("k", &OrbitClass::k)
        .def_readonly("min_period", &OrbitClass::min_period)
        .def_readonly("squared_radius", &OrbitClass::squared_radius)
        .def_readonly("sigma", &OrbitClass::sigma)
        .def_readonly("mu", &OrbitClass::mu)
        .def_readonly("mu_mean_per_k", &OrbitClass::mu_mean_per_k)
        .def_readonly("multiplicity", &OrbitClass::multiplicity)
        .def_readonly("congruence", &OrbitClass::congruence);

    py::class_<ReebOrbitClass>(m, "ReebOrbitClass")
        .def_readonly("binding", &ReebOrbitClass::binding)
        .def_readonly("source", &ReebOrbitClass::source)
        .def_readonly("k", &ReebOrbitClass::k)
        .def_readonly("T", &ReebOrbitClass::T)
        .def_readonly("mu_s3", &ReebOrbitClass::mu_s3)
        .def_readonly("rho_bar", &ReebOrbitClass::rho_bar);

    py::class_<ContactInvariants>(m, "ContactInvariants")
        .def_readonly("s", &ContactInvariants::s)
        .def_readonly("S", &ContactInvariants::S)
        .def_readonly("Delta", &ContactInvariants::Delta);

    py::class_<ConvexityReport>(m, "ConvexityReport")
        .def_readonly("dynamically_convex", &ConvexityReport::dynamically_convex)
        .def_readonly("witness", &ConvexityReport::witness)
        .def_readonly("negative_witness", &ConvexityReport::negative_witness)
        .def_readonly("certificates", &ConvexityReport::certificates)
        .def_readonly("k_max", &ConvexityReport::k_max)
        .def("all_certified", &ConvexityReport::all_certified);

    py::class_<ContactFormReport>(m, "ContactFormReport")
        .def_readonly("t_min", &ContactFormReport::t_min)
        .def_readonly("volume", &ContactFormReport::volume)
        .def_readonly("rho_sys", &ContactFormReport::rho_sys)
        .def_readonly("s", &ContactFormReport::s)
        .def_readonly("S", &ContactFormReport::S)
        .def_readonly("Delta", &ContactFormReport::Delta)
        .def_readonly("dynamically_convex", &ContactFormReport::dynamically_convex)
        .def_readonly("convexity_witness", &ContactFormReport::convexity_witness)
        .def_readonly("negative_index_witness", &ContactFormReport::negative_index_witness);

    py::class_<TheoremVerification>(m, "TheoremVerification")
        .def_readonly("params", &TheoremVerification::params)
        .def_readonly("map", &TheoremVerification::map)
        .def_readonly("contact", &TheoremVerification::contact)
        .def_readonly("clauses", &TheoremVerification::clauses)
        .def("all_pass", &TheoremVerification::all_pass);

    m.def("select_params", &select_params, py::arg("n"), py::arg("eps"),
          "Automatic parameter selection for one (n, eps) cell; raises RuntimeError "
          "when the dyadic schedule is exhausted.");
    m.def("verify_map", &verify_map, py::arg("params"), py::arg("k_max") = 0,
          "The eight-statement disk map ledger, one margin per statement.");
    m.def("verify_theorems", &verify_theorems, py::arg("n"), py::arg("eps"), py::arg("k_max") = 0,
          "End-to-end certification of one cell: selection, map ledger, contact clauses.");
    m.def("verify_theorems_with", &verify_theorems_with, py::arg("params"), py::arg("k_max") = 0,
          "The same ledger on explicitly given parameters, bypassing the search.");
    m.def("enumerate_orbit_classes", &enumerate_orbit_classes, py::arg("params"), py::arg("k"),
          "All classes of points fixed by the k-th iterate of the composite map.");
    m.def("calabi_phi", &calabi_phi, py::arg("params"),
          "Calabi invariant of the composite map.");
    m.def("contact_form_report", &contact_form_report, py::arg("params"), py::arg("k_max"),
          "Invariants of the induced contact form on the sphere.");
    m.def("check_dynamical_convexity", &check_dynamical_convexity, py::arg("params"),
          py::arg("k_max"), "Index floor 3 over all closed orbits, with per-family certificates.");
    m.def("invariants_sS", &invariants_sS, py::arg("params"),
          "Extremal mean rotation invariants s, S and their gap.");
    m.def("lift_class", &lift_class, py::arg("params"), py::arg("cls"), py::arg("k"),
          "Reeb lift of a disk orbit class at iterate k.");
    m.def("lift_binding", &lift_binding, py::arg("k"), "The k-fold cover of the binding circle.");
    m.def("reference_contact_report", &reference_contact_report,
          "Closed-form invariants of the unperturbed round contact form.");
    m.def("reference_orbit", &reference_orbit, py::arg("k"),
          "The k-fold Hopf fiber cover of the round form.");
    m.def(
        "run_report_json",
        [](int n, double eps, int k_max) {
            const TheoremVerification v = verify_theorems(n, eps, k_max);
            const int rows = k_max > 0 ? k_max : 8 * n;
            return to_json(build_run_report(v, rows));
        },
        py::arg("n"), py::arg("eps"), py::arg("k_max") = 0,
        "Full verification run serialized as the stable JSON report document.");
    m.def(
        "reference_report_json",
        [](int k_max) { return to_json(build_reference_report(k_max)); }, py::arg("k_max") = 8,
        "The round reference form serialized in the same report schema.");
}
