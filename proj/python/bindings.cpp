#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kleinfv/boundary.hpp"
#include "kleinfv/errors.hpp"
#include "kleinfv/numeric_oracle.hpp"
#include "kleinfv/smooth.hpp"
#include "kleinfv/special.hpp"
#include "kleinfv/step.hpp"

namespace py = pybind11;
using namespace kfv;

namespace {

py::list checks_to_list(const VerifyReport& report) {
  py::list out;
  for (const CheckEntry& c : report.checks) {
    py::dict d;
    d["name"] = c.name;
    d["residual"] = c.residual;
    d["tolerance"] = c.tolerance;
    d["pass"] = c.pass;
    out.append(d);
  }
  return out;
}

PhysicalParams make_params(double m, double u, double E, double r, cplx C1, cplx D1, cplx C2, cplx D2) {
  PhysicalParams p;
  p.m = m;
  p.u = u;
  p.E = E;
  p.r = r;
  p.C1 = C1;
  p.D1 = D1;
  p.C2 = C2;
  p.D2 = D2;
  return p;
}

ScatterCoefficients coefficients(const PhysicalParams& p) {
  const DerivedParams d = derive(p);
  return p.is_step() ? step_coeffs(p, d) : asymptotic_coeffs(p, d);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Feshbach-Villars spin-1/2 scattering off a tanh barrier and its sharp-step limit";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ThresholdError>(m, "ThresholdError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<NonConvergence>(m, "NonConvergence", base.ptr());
  py::register_exception<DegenerateParams>(m, "DegenerateParams", base.ptr());
  py::register_exception<RegimeError>(m, "RegimeError", base.ptr());
  py::register_exception<GridMismatch>(m, "GridMismatch", base.ptr());
  py::register_exception<GridTooCoarse>(m, "GridTooCoarse", base.ptr());
  py::register_exception<StepUnderflow>(m, "StepUnderflow", base.ptr());

  py::enum_<EnergyRegime>(m, "EnergyRegime")
      .value("TRANSMISSION", EnergyRegime::kTransmission)
      .value("TOTAL_REFLECTION", EnergyRegime::kTotalReflection)
      .value("KLEIN", EnergyRegime::kKlein)
      .value("SUB_BARRIER_INVALID", EnergyRegime::kSubBarrierInvalid);
  m.def("regime_name", [](EnergyRegime r) { return std::string(regime_name(r)); });

  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def(py::init(&make_params), py::arg("m") = 1.0, py::arg("u") = 0.0, py::arg("E") = 2.0, py::arg("r") = 0.0,
           py::arg("C1") = cplx(1.0), py::arg("D1") = cplx(1.0), py::arg("C2") = cplx(1.0),
           py::arg("D2") = cplx(1.0))
      .def_readwrite("m", &PhysicalParams::m)
      .def_readwrite("u", &PhysicalParams::u)
      .def_readwrite("E", &PhysicalParams::E)
      .def_readwrite("r", &PhysicalParams::r)
      .def_readwrite("C1", &PhysicalParams::C1)
      .def_readwrite("D1", &PhysicalParams::D1)
      .def_readwrite("C2", &PhysicalParams::C2)
      .def_readwrite("D2", &PhysicalParams::D2)
      .def("is_step", &PhysicalParams::is_step)
      .def("__repr__", [](const PhysicalParams& p) {
        return "PhysicalParams(m=" + std::to_string(p.m) + ", u=" + std::to_string(p.u) +
               ", E=" + std::to_string(p.E) + ", r=" + std::to_string(p.r) + ")";
      });

  py::class_<DerivedParams>(m, "DerivedParams")
      .def_readonly("k1", &DerivedParams::k1)
      .def_readonly("k2", &DerivedParams::k2)
      .def_readonly("mu", &DerivedParams::mu)
      .def_readonly("nu", &DerivedParams::nu)
      .def_readonly("v1", &DerivedParams::v1)
      .def_readonly("v2", &DerivedParams::v2)
      .def_readonly("regime", &DerivedParams::regime);

  m.def("classify", &classify, py::arg("m"), py::arg("u"), py::arg("E"), py::arg("exclusion_tol") = 1e-12);
  m.def(
      "derive",
      [](const PhysicalParams& p, bool klein_negative_k2) {
        DeriveOptions o;
        o.klein_negative_k2 = klein_negative_k2;
        return derive(p, o);
      },
      py::arg("params"), py::arg("klein_negative_k2") = true);

  py::class_<ScatterCoefficients>(m, "ScatterCoefficients")
      .def_readonly("A_s", &ScatterCoefficients::A_s)
      .def_readonly("B_s", &ScatterCoefficients::B_s)
      .def_readonly("A_d", &ScatterCoefficients::A_d)
      .def_readonly("B_d", &ScatterCoefficients::B_d)
      .def_readonly("R", &ScatterCoefficients::R)
      .def_readonly("T", &ScatterCoefficients::T)
      .def_readonly("regime", &ScatterCoefficients::regime)
      .def("identity_residual", &ScatterCoefficients::identity_residual);

  py::class_<StepRT>(m, "StepRT")
      .def_readonly("R", &StepRT::R)
      .def_readonly("T", &StepRT::T)
      .def_readonly("T_abs", &StepRT::T_abs)
      .def_readonly("resonance", &StepRT::resonance);

  m.def("coefficients", &coefficients, py::arg("params"),
        "Step formulas for r == 0, Gamma-ratio amplitudes otherwise.");
  m.def("step_rt", &step_rt, py::arg("k1"), py::arg("k2"), py::arg("u"));
  m.def("potential_at", &potential_at, py::arg("x"), py::arg("params"));
  m.def("map_y", &map_y, py::arg("x"), py::arg("r"));
  m.def("asymptotic_extent", [](const PhysicalParams& p) { return asymptotic_extent(p, derive(p)); });

  m.def("gamma", py::overload_cast<cplx>(&kfv::gamma), py::arg("z"));
  m.def("log_gamma", &log_gamma, py::arg("z"));
  m.def(
      "hyp2f1", [](cplx a, cplx b, cplx c, double y) { return hyp2f1(a, b, c, UnitArg::from_y(y)); },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("y"), "2F1(a, b; c; y) for real 0 <= y < 1.");

  py::class_<SmoothSolution>(m, "SmoothSolution")
      .def(py::init([](const PhysicalParams& p) { return SmoothSolution(p); }), py::arg("params"))
      .def_property_readonly("derived", &SmoothSolution::derived)
      .def("spinor", &SmoothSolution::spinor, py::arg("x"))
      .def("spinor_dx", [](const SmoothSolution& s, double x) { return s.spinor_jet(x).dx; }, py::arg("x"))
      .def("density", [](const SmoothSolution& s, double x) { return density(s.spinor(x)); }, py::arg("x"))
      .def("current", &SmoothSolution::current_at, py::arg("x"))
      .def("basis", [](const SmoothSolution& s, double x) {
        const BasisValues b = s.basis_at(x);
        return py::make_tuple(b.xi_s, b.xi_d, b.eta_s, b.eta_d);
      }, py::arg("x"), "(xi_s, xi_d, eta_s, eta_d) at x.")
      .def("coefficients", &SmoothSolution::coefficients);

  py::class_<StepSolution>(m, "StepSolution")
      .def(py::init([](const PhysicalParams& p) { return StepSolution(p); }), py::arg("params"))
      .def_property_readonly("derived", &StepSolution::derived)
      .def_property_readonly("coefficients", &StepSolution::coefficients)
      .def("spinor", &StepSolution::spinor, py::arg("x"))
      .def("spinor_dx", [](const StepSolution& s, double x) { return s.spinor_jet(x).dx; }, py::arg("x"))
      .def("density", [](const StepSolution& s, double x) { return density(s.spinor(x)); }, py::arg("x"))
      .def("current", [](const StepSolution& s, double x) { return current(s.spinor_jet(x), s.params().m); },
           py::arg("x"))
      .def("spinor_at_origin", [](const StepSolution& s, bool left) {
        return s.spinor_at_origin(left ? Side::kLeft : Side::kRight);
      }, py::arg("left"));

  m.def("density", &density, py::arg("psi"));
  m.def("current", py::overload_cast<const EightSpinor&, const EightSpinor&, double>(&current), py::arg("psi"),
        py::arg("dpsi_dx"), py::arg("m"));
  m.def("charge_conjugate", [](const EightSpinor& psi) { return charge_conjugate(psi); }, py::arg("psi"));
  m.def("tau4", [] { return FVMatrix(matrices::tau4()); });
  m.def("tau5", [] { return FVMatrix(matrices::tau5()); });
  m.def("ocur", [] { return FVMatrix(matrices::ocur()); });

  m.def("check_boundary", [](const PhysicalParams& p, double tolerance) {
    const BoundaryReport b = check_boundary(StepSolution(p), tolerance);
    py::dict d;
    d["checks"] = checks_to_list(b.report);
    d["pass"] = b.report.all_pass();
    d["rho_left"] = b.rho_left;
    d["rho_right"] = b.rho_right;
    d["j_left"] = b.j_left;
    d["j_right"] = b.j_right;
    d["charge_ratio"] = b.charge_ratio;
    d["pair_creation"] = b.pair_creation;
    return d;
  }, py::arg("params"), py::arg("tolerance") = kBoundaryTolerance);

  m.def("oracle_suite", [](const PhysicalParams& p) {
    const VerifyReport r = oracle_suite(p);
    py::dict d;
    d["checks"] = checks_to_list(r);
    d["pass"] = r.all_pass();
    return d;
  }, py::arg("params"));

  m.def("limit_convergence", [](const PhysicalParams& p, const std::vector<double>& rs) {
    const LimitTable t = limit_convergence(p, rs);
    py::list rows;
    for (const LimitRow& row : t.rows) {
      py::dict d;
      d["r"] = row.r;
      d["R_smooth"] = row.R_smooth;
      d["T_smooth"] = row.T_smooth;
      d["R_err"] = row.R_err;
      d["T_err"] = row.T_err;
      rows.append(d);
    }
    py::dict d;
    d["rows"] = rows;
    d["R_step"] = t.R_step;
    d["T_step"] = t.T_step;
    d["monotone"] = t.monotone;
    return d;
  }, py::arg("params"), py::arg("r_sequence"));
}
