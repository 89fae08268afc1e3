// Python bindings for the 2-D CVM library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>

#include "cvm2d/analytic.hpp"
#include "cvm2d/config_vars.hpp"
#include "cvm2d/divergence.hpp"
#include "cvm2d/errors.hpp"
#include "cvm2d/lattice.hpp"
#include "cvm2d/minimizer.hpp"
#include "cvm2d/report_io.hpp"
#include "cvm2d/sweep.hpp"
#include "cvm2d/thermo.hpp"

namespace py = pybind11;
using namespace cvm2d;

namespace {

Cell to_cell(std::pair<int, int> rc) { return {rc.first, rc.second}; }
std::pair<int, int> from_cell(Cell c) { return {c.r, c.c}; }

DivergenceOptions make_options(double floor, bool strict) {
    DivergenceOptions options;
    options.zero_handling = strict ? ZeroHandling::strict_error : ZeroHandling::epsilon_floor;
    options.eps_floor = floor;
    return options;
}

MinimizeConfig make_config(int max_flips, int trials, std::uint64_t seed, bool record_trace) {
    return {max_flips, trials, seed, record_trace};
}

py::dict vars_dict(const ConfigVars& cv) {
    py::dict d;
    d["x1"] = cv.x1;
    d["x2"] = cv.x2;
    d["y1"] = cv.y1;
    d["y2"] = cv.y2;
    d["y3"] = cv.y3;
    d["w1"] = cv.w1;
    d["w2"] = cv.w2;
    d["w3"] = cv.w3;
    d["z1"] = cv.z1;
    d["z2"] = cv.z2;
    d["z3"] = cv.z3;
    d["z4"] = cv.z4;
    d["z5"] = cv.z5;
    d["z6"] = cv.z6;
    return d;
}

}  // namespace

PYBIND11_MODULE(cvm2d, m) {
    m.doc() = "2-D cluster variation method: configuration-variable counting on a zigzag "
              "torus, closed-form equilibrium, pair-flip free-energy minimization, "
              "configuration-variable divergence, and h-sweeps";
    m.attr("__version__") = "0.1.0";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<Lattice>(m, "Lattice", "Toroidal zigzag lattice of binary states")
        .def(py::init<int, int>(), py::arg("rows"), py::arg("cols"))
        .def_property_readonly("rows", &Lattice::rows)
        .def_property_readonly("cols", &Lattice::cols)
        .def("at", [](const Lattice& l, int r, int c) { return static_cast<int>(l.at(r, c)); },
             py::arg("r"), py::arg("c"), "State at (r, c): 1 = A, 0 = B")
        .def("set", [](Lattice& l, int r, int c, int s) {
                 l.set(r, c, s ? NodeState::A : NodeState::B);
             },
             py::arg("r"), py::arg("c"), py::arg("state"))
        .def("count_a", &Lattice::count_a)
        .def("__eq__", [](const Lattice& a, const Lattice& b) { return a == b; })
        .def("__str__", [](const Lattice& l) { return serialize_pattern(l); })
        .def("__repr__", [](const Lattice& l) {
            return "<Lattice " + std::to_string(l.rows()) + "x" + std::to_string(l.cols()) + ">";
        });

    m.def("parse_pattern", [](const std::string& text) { return parse_pattern(text); },
          py::arg("text"), "Parse lines of 0/1 into a lattice");
    m.def("serialize_pattern", &serialize_pattern, py::arg("lattice"));
    m.def("build_envelope", &build_envelope, py::arg("core"),
          "Mirror-envelope a core to twice its size in each direction");
    m.def("fold_index", &fold_index, py::arg("i"), py::arg("n"));
    m.def("swap_states",
          [](Lattice& lat, std::pair<int, int> a, std::pair<int, int> b) {
              swap_states(lat, to_cell(a), to_cell(b));
          },
          py::arg("lattice"), py::arg("a"), py::arg("b"),
          "Exchange the states of two opposite-state cells, in place");
    m.def("random_equiprobable", &random_equiprobable, py::arg("rows"), py::arg("cols"),
          py::arg("seed"), "Uniformly shuffled lattice with exactly half the cells A");
    m.def("stripe_lattice", &stripe_lattice, py::arg("rows"), py::arg("cols"));
    m.def("block_lattice", &block_lattice, py::arg("rows"), py::arg("cols"));

    py::class_<ConfigVars>(m, "ConfigVars",
                           "The fourteen configuration-variable fractions (y2/w2/z2/z5 stored "
                           "pre-degeneracy)")
        .def(py::init<>())
        .def_readwrite("x1", &ConfigVars::x1)
        .def_readwrite("x2", &ConfigVars::x2)
        .def_readwrite("y1", &ConfigVars::y1)
        .def_readwrite("y2", &ConfigVars::y2)
        .def_readwrite("y3", &ConfigVars::y3)
        .def_readwrite("w1", &ConfigVars::w1)
        .def_readwrite("w2", &ConfigVars::w2)
        .def_readwrite("w3", &ConfigVars::w3)
        .def_readwrite("z1", &ConfigVars::z1)
        .def_readwrite("z2", &ConfigVars::z2)
        .def_readwrite("z3", &ConfigVars::z3)
        .def_readwrite("z4", &ConfigVars::z4)
        .def_readwrite("z5", &ConfigVars::z5)
        .def_readwrite("z6", &ConfigVars::z6)
        .def("as_dict", &vars_dict)
        .def("__eq__", [](const ConfigVars& a, const ConfigVars& b) { return a == b; })
        .def("__repr__", [](const ConfigVars& cv) {
            return "<ConfigVars x1=" + std::to_string(cv.x1) + " y2=" + std::to_string(cv.y2) +
                   " z1=" + std::to_string(cv.z1) + " z3=" + std::to_string(cv.z3) + ">";
        });

    py::class_<EquivalenceCheck>(m, "EquivalenceCheck")
        .def_readonly("name", &EquivalenceCheck::name)
        .def_readonly("lhs", &EquivalenceCheck::lhs)
        .def_readonly("rhs", &EquivalenceCheck::rhs)
        .def_readonly("residual", &EquivalenceCheck::residual)
        .def_readonly("pass_", &EquivalenceCheck::pass)
        .def("__repr__", [](const EquivalenceCheck& c) {
            return "<EquivalenceCheck '" + c.name + "' residual=" + std::to_string(c.residual) +
                   (c.pass ? " pass>" : " FAIL>");
        });

    py::class_<EquivalenceReport>(m, "EquivalenceReport")
        .def_readonly("checks", &EquivalenceReport::checks)
        .def_readonly("all_pass", &EquivalenceReport::all_pass)
        .def_readonly("max_abs_residual", &EquivalenceReport::max_abs_residual);

    m.def("count_config_vars", &count_config_vars, py::arg("lattice"),
          "Count the fourteen configuration-variable fractions");
    m.def("check_lattice_equivalences",
          [](const Lattice& lat) { return check_equivalences(count_configuration(lat)); },
          py::arg("lattice"), "Exact integer equivalence-relation check of a counted lattice");
    m.def("check_equivalences",
          [](const ConfigVars& cv, double tol) { return check_equivalences(cv, tol); },
          py::arg("vars"), py::arg("tol"),
          "Tolerance-based equivalence-relation check for analytic variables");

    m.def("h_from_eps1", &h_from_eps1, py::arg("eps1"));
    m.def("eps1_from_h", &eps1_from_h, py::arg("h"));
    m.def("lf", &lf, py::arg("v"), "v*ln(v) - v with lf(0) = 0");
    m.def("enthalpy",
          [](const ConfigVars& cv, double eps0, double eps1) {
              return enthalpy(cv, {eps0, eps1});
          },
          py::arg("vars"), py::arg("eps0") = 0.0, py::arg("eps1") = 0.0,
          "eps0*x1 + 2*eps1*(-z1 + z3 + z4 - z6)");
    m.def("entropy", &entropy, py::arg("vars"));
    m.def("free_energy",
          [](const ConfigVars& cv, double eps0, double eps1) {
              return free_energy(cv, {eps0, eps1});
          },
          py::arg("vars"), py::arg("eps0") = 0.0, py::arg("eps1") = 0.0,
          "Reduced free energy enthalpy - entropy");

    m.def("delta", &delta, py::arg("h"), "-h^2 + 6h - 1");
    m.def("analytic_config_vars", &analytic_config_vars, py::arg("h"),
          "Closed-form equilibrium variables at interaction parameter h");
    m.def("interpretation_triple",
          [](double h) {
              const InterpretationTriple t = interpretation_triple(h);
              return py::make_tuple(t.y2, t.z3, t.z1);
          },
          py::arg("h"), "The (y2, z3, z1) equilibrium triple at h");

    py::class_<HRangeEstimate>(m, "HRangeEstimate")
        .def_readonly("lo", &HRangeEstimate::lo)
        .def_readonly("hi", &HRangeEstimate::hi)
        .def_readonly("h_from_y2", &HRangeEstimate::h_from_y2)
        .def_readonly("h_from_z3", &HRangeEstimate::h_from_z3)
        .def_readonly("h_from_z1", &HRangeEstimate::h_from_z1)
        .def_readonly("notes", &HRangeEstimate::notes);

    m.def("estimate_h_range",
          [](const ConfigVars& cv, double margin) {
              return estimate_h_range(cv, {margin});
          },
          py::arg("vars"), py::arg("margin") = 0.15,
          "Invert the interpretation-variable curves to suggest an h range");

    py::class_<TraceStep>(m, "TraceStep")
        .def_readonly("index", &TraceStep::index)
        .def_property_readonly("a_cell", [](const TraceStep& s) { return from_cell(s.a_cell); })
        .def_property_readonly("b_cell", [](const TraceStep& s) { return from_cell(s.b_cell); })
        .def_readonly("f_before", &TraceStep::f_before)
        .def_readonly("f_after", &TraceStep::f_after)
        .def_readonly("accepted", &TraceStep::accepted);

    py::class_<MinimizeTrace>(m, "MinimizeTrace")
        .def_readonly("seed", &MinimizeTrace::seed)
        .def_readonly("rng_algorithm", &MinimizeTrace::rng_algorithm)
        .def_readonly("f_initial", &MinimizeTrace::f_initial)
        .def_readonly("f_final", &MinimizeTrace::f_final)
        .def_readonly("attempted_count", &MinimizeTrace::attempted_count)
        .def_readonly("accepted_count", &MinimizeTrace::accepted_count)
        .def_readonly("steps", &MinimizeTrace::steps);

    py::class_<MinimizeResult>(m, "MinimizeResult")
        .def_readonly("lattice", &MinimizeResult::lattice)
        .def_readonly("vars", &MinimizeResult::vars)
        .def_readonly("trace", &MinimizeResult::trace);

    m.def("minimize",
          [](const Lattice& lat, double h, double eps0, int max_flips, int trials,
             std::uint64_t seed, bool record_trace) {
              const EnthalpyParams params{eps0, eps1_from_h(h)};
              const MinimizeConfig cfg = make_config(max_flips, trials, seed, record_trace);
              return trials == 1 ? minimize(lat, params, cfg)
                                 : best_of_trials(lat, params, cfg);
          },
          py::arg("lattice"), py::arg("h"), py::arg("eps0") = 0.0, py::arg("max_flips") = 100,
          py::arg("trials") = 1, py::arg("seed") = 1, py::arg("record_trace") = false,
          "Pair-flip descent at fixed h; with trials > 1 returns the best of seeded restarts");

    m.def("kl_divergence",
          [](const std::vector<double>& q, const std::vector<double>& p, double floor,
             bool strict) {
              return kl_divergence(q, p, make_options(floor, strict));
          },
          py::arg("q"), py::arg("p"), py::arg("floor") = 1e-9, py::arg("strict") = false);
    m.def("cvm_divergence",
          [](const ConfigVars& q, const ConfigVars& p, double floor, bool strict) {
              return cvm_divergence(q, p, make_options(floor, strict));
          },
          py::arg("q"), py::arg("p"), py::arg("floor") = 1e-9, py::arg("strict") = false,
          "Configuration-variable divergence D(q || p); best fit minimizes |D|");

    py::class_<InterpretationTriple>(m, "InterpretationTriple")
        .def_readonly("y2", &InterpretationTriple::y2)
        .def_readonly("z3", &InterpretationTriple::z3)
        .def_readonly("z1", &InterpretationTriple::z1);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("h", &SweepRow::h)
        .def_readonly("divergence", &SweepRow::divergence)
        .def_readonly("f_final", &SweepRow::f_final)
        .def_readonly("seed", &SweepRow::seed)
        .def_readonly("vars", &SweepRow::vars)
        .def_readonly("analytic_ref", &SweepRow::analytic_ref);

    py::class_<SweepReport>(m, "SweepReport")
        .def_readonly("initial_vars", &SweepReport::initial_vars)
        .def_readonly("rows", &SweepReport::rows)
        .def_readonly("best_index", &SweepReport::best_index)
        .def_readonly("warnings", &SweepReport::warnings)
        .def_property_readonly("best",
                               [](const SweepReport& r) { return r.best(); });

    m.def("run_sweep",
          [](const Lattice& lat, double h_lo, double h_hi, double step, int trials, int flips,
             std::uint64_t seed) {
              SweepSpec spec;
              spec.h_lo = h_lo;
              spec.h_hi = h_hi;
              spec.step = step;
              spec.minimize_cfg = make_config(flips, trials, seed, false);
              return run_sweep(lat, spec);
          },
          py::arg("lattice"), py::arg("h_lo"), py::arg("h_hi"), py::arg("step") = 0.05,
          py::arg("trials") = 4, py::arg("flips") = 100, py::arg("seed") = 1,
          "Minimize at each h on the grid and report divergence vs h");
    m.def("report_csv",
          [](const SweepReport& rep) { return emit_report(rep, ReportFormat::csv); },
          py::arg("report"));
    m.def("report_json",
          [](const SweepReport& rep) { return emit_report(rep, ReportFormat::json); },
          py::arg("report"));
    m.def("report_from_json", &report_from_json, py::arg("text"));
}
