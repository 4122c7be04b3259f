#include <algorithm>
#include <span>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wavefan/cli_io.hpp"
#include "wavefan/verification.hpp"

namespace py = pybind11;
using namespace wavefan;

namespace {

py::array_t<double> to_array(std::span<const double> v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

std::vector<double> to_vector(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  return std::vector<double>(a.data(), a.data() + a.size());
}

// Applies fn to a scalar or elementwise to an array of any shape.
template <typename Fn>
py::object elementwise(Fn fn, const py::object& x) {
  if (py::isinstance<py::float_>(x) || py::isinstance<py::int_>(x)) {
    return py::float_(fn(x.cast<double>()));
  }
  auto in = py::array_t<double, py::array::c_style | py::array::forcecast>::ensure(x);
  if (!in) throw py::type_error("expected a float or an array of floats");
  py::array_t<double> out(std::vector<py::ssize_t>(in.shape(), in.shape() + in.ndim()));
  const double* src = in.data();
  double* dst = out.mutable_data();
  for (py::ssize_t k = 0; k < in.size(); ++k) dst[k] = fn(src[k]);
  return out;
}

}  // namespace

PYBIND11_MODULE(_wavefan, m) {
  m.doc() = "Viscous wave fan profiles for scalar Riemann problems";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", error.ptr());
  py::register_exception<UnsupportedFlux>(m, "UnsupportedFlux", error.ptr());
  py::register_exception<LinearSolverError>(m, "LinearSolverError", error.ptr());
  py::register_exception<IntegrationError>(m, "IntegrationError", error.ptr());
  py::register_exception<CoverageError>(m, "CoverageError", error.ptr());
  py::register_exception<DegenerateProfile>(m, "DegenerateProfile", error.ptr());
  py::register_exception<InconclusiveProbe>(m, "InconclusiveProbe", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<IoError>(m, "IoError", error.ptr());
  py::register_exception<NonConvergence>(m, "NonConvergence", error.ptr());

  py::class_<FluxSpec>(m, "FluxSpec")
      .def_static("burgers", &FluxSpec::Burgers)
      .def_static("polynomial", &FluxSpec::Polynomial, py::arg("coefficients"))
      .def_static("parse", [](const std::string& token) { return FluxSpec::Parse(token); })
      .def_property_readonly("is_burgers", &FluxSpec::is_burgers)
      .def_property_readonly("coefficients", &FluxSpec::coefficients)
      .def("f", [](const FluxSpec& f, const py::object& u) {
        return elementwise([&](double x) { return f.f(x); }, u);
      }, py::arg("u"))
      .def("df", [](const FluxSpec& f, const py::object& u) {
        return elementwise([&](double x) { return f.df(x); }, u);
      }, py::arg("u"))
      .def("d2f", [](const FluxSpec& f, const py::object& u) {
        return elementwise([&](double x) { return f.d2f(x); }, u);
      }, py::arg("u"))
      .def("__str__", &FluxSpec::ToString)
      .def("__repr__", [](const FluxSpec& f) { return "FluxSpec.parse('" + f.ToString() + "')"; });

  py::class_<ProfileProblem>(m, "ProfileProblem")
      .def(py::init([](double eps, double uL, double uR, const FluxSpec& flux) {
             ProfileProblem p{eps, uL, uR, flux};
             p.validate();
             return p;
           }),
           py::arg("epsilon"), py::arg("uL"), py::arg("uR"), py::arg("flux") = FluxSpec::Burgers())
      .def_readwrite("epsilon", &ProfileProblem::epsilon)
      .def_readwrite("uL", &ProfileProblem::uL)
      .def_readwrite("uR", &ProfileProblem::uR)
      .def_readwrite("flux", &ProfileProblem::flux);

  py::class_<SolveOptions>(m, "SolveOptions")
      .def(py::init<>())
      .def_readwrite("newton_tol", &SolveOptions::newton_tol)
      .def_readwrite("max_iter", &SolveOptions::max_iter)
      .def_readwrite("damping", &SolveOptions::damping)
      .def_readwrite("max_halvings", &SolveOptions::max_halvings)
      .def_readwrite("tail_tol", &SolveOptions::tail_tol)
      .def_readwrite("base_nodes", &SolveOptions::base_nodes)
      .def_readwrite("nodes_per_layer", &SolveOptions::nodes_per_layer)
      .def_readwrite("continuation", &SolveOptions::continuation)
      .def_readwrite("domain_padding", &SolveOptions::domain_padding);

  py::class_<SolveReport>(m, "SolveReport")
      .def_readonly("converged", &SolveReport::converged)
      .def_readonly("iterations", &SolveReport::iterations)
      .def_readonly("residual_history", &SolveReport::residual_history)
      .def_readonly("xi_min", &SolveReport::xi_min)
      .def_readonly("xi_max", &SolveReport::xi_max)
      .def_readonly("mesh_size", &SolveReport::mesh_size)
      .def_readonly("stage_epsilons", &SolveReport::stage_epsilons)
      .def_readonly("stage_iterations", &SolveReport::stage_iterations);

  py::class_<Profile>(m, "Profile")
      .def(py::init([](const py::array_t<double, py::array::c_style | py::array::forcecast>& xi,
                       const py::array_t<double, py::array::c_style | py::array::forcecast>& u) {
             return make_profile(Mesh(to_vector(xi)), to_vector(u));
           }),
           py::arg("xi"), py::arg("u"))
      .def_property_readonly("xi", [](const Profile& p) {
        return to_array(p.mesh.nodes());
      })
      .def_property_readonly("u", [](const Profile& p) { return to_array(p.u); })
      .def_property_readonly("du", [](const Profile& p) { return to_array(p.du); })
      .def("__len__", &Profile::size)
      .def("__call__", [](const Profile& p, const py::object& xi) {
        return elementwise([&](double x) { return interpolate(p, x); }, xi);
      }, py::arg("xi"));

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("profile", &SolveResult::profile)
      .def_readonly("report", &SolveResult::report);

  m.def("solve_profile", &solve_profile, py::arg("problem"), py::arg("options") = SolveOptions{},
        py::call_guard<py::gil_scoped_release>());
  m.def("continuation_sweep", &continuation_sweep, py::arg("problem"), py::arg("eps_list"),
        py::arg("options") = SolveOptions{}, py::call_guard<py::gil_scoped_release>());
  m.def("residual", [](const ProfileProblem& p, const Profile& prof) {
    return to_array(residual(p, prof));
  });

  py::enum_<WaveKind>(m, "WaveKind")
      .value("CONSTANT", WaveKind::kConstant)
      .value("SHOCK", WaveKind::kShock)
      .value("RAREFACTION", WaveKind::kRarefaction);

  py::class_<Wave>(m, "Wave")
      .def_readonly("kind", &Wave::kind)
      .def_readonly("xi_lo", &Wave::xi_lo)
      .def_readonly("xi_hi", &Wave::xi_hi)
      .def_readonly("u_left", &Wave::u_left)
      .def_readonly("u_right", &Wave::u_right)
      .def_readonly("speed", &Wave::speed);

  py::class_<RiemannSolution>(m, "RiemannSolution")
      .def_readonly("waves", &RiemannSolution::waves)
      .def_readonly("uL", &RiemannSolution::uL)
      .def_readonly("uR", &RiemannSolution::uR)
      .def("breakpoints", &RiemannSolution::breakpoints)
      .def("__call__", [](const RiemannSolution& s, const py::object& xi) {
        return elementwise([&](double x) { return eval_riemann(s, x); }, xi);
      }, py::arg("xi"))
      .def("__str__", [](const RiemannSolution& s) { return describe(s); });

  m.def("solve_exact", [](const FluxSpec& f, double uL, double uR) { return solve_exact(f, uL, uR); },
        py::arg("flux"), py::arg("uL"), py::arg("uR"));

  py::class_<CornerProfile>(m, "CornerProfile")
      .def_property_readonly("xi", [](const CornerProfile& c) {
        return to_array(c.mesh.nodes());
      })
      .def_property_readonly("U", [](const CornerProfile& c) { return to_array(c.U); })
      .def_property_readonly("p", [](const CornerProfile& c) { return to_array(c.p); })
      .def_property_readonly("w", [](const CornerProfile& c) { return to_array(c.w); })
      .def("__len__", &CornerProfile::size)
      .def("as_profile", &CornerProfile::as_profile);

  py::class_<TailFit>(m, "TailFit")
      .def_readonly("rate", &TailFit::rate)
      .def_readonly("amplitude", &TailFit::amplitude)
      .def_readonly("nodes", &TailFit::nodes);

  m.def("solve_corner", [](double lo, double hi, double rtol) {
    CornerOptions o;
    o.rtol = rtol;
    return solve_corner(lo, hi, o);
  }, py::arg("xi_min"), py::arg("xi_max"), py::arg("rtol") = 1e-12);
  m.def("invert_first_integral", [](const py::object& w) {
    return elementwise(&invert_first_integral, w);
  }, py::arg("w"));
  m.def("corner_first_integral", [](const CornerProfile& c) { return to_array(first_integral_H(c)); });
  m.def("first_integral_H", [](const Profile& p, double eps) {
    return to_array(first_integral_H(p, eps));
  }, py::arg("profile"), py::arg("epsilon"));
  m.def("first_integral_spread", [](const Profile& p, double eps) {
    return first_integral_spread(first_integral_H(p, eps), p.du);
  }, py::arg("profile"), py::arg("epsilon"));
  m.def("fit_tail_rate", &fit_tail_rate, py::arg("corner"), py::arg("lo"), py::arg("hi"));

  py::class_<MarginReport>(m, "MarginReport")
      .def_readonly("margin", &MarginReport::margin)
      .def_readonly("noise_floor", &MarginReport::noise_floor)
      .def_readonly("nodes", &MarginReport::nodes);
  py::class_<ProbeReport>(m, "ProbeReport")
      .def_readonly("max_distance", &ProbeReport::max_distance)
      .def_readonly("converged", &ProbeReport::converged)
      .def_readonly("failed", &ProbeReport::failed);

  m.def("check_monotone", &check_monotone, py::arg("profile"), py::arg("uL"), py::arg("uR"));
  m.def("check_symmetry", &check_symmetry, py::arg("problem"), py::arg("profile"));
  m.def("check_corner_expansion", &check_corner_expansion, py::arg("problem"),
        py::arg("profile"), py::arg("corner"));
  m.def("l1_window_error", &l1_window_error, py::arg("profile"), py::arg("exact"), py::arg("lo"),
        py::arg("hi"));
  m.def("sliding_supersolution_margin", &sliding_supersolution_margin, py::arg("problem"),
        py::arg("profile"), py::arg("lam"));
  m.def("sweeping_supersolution_margin", &sweeping_supersolution_margin, py::arg("problem"),
        py::arg("profile"), py::arg("lam"), py::arg("K"));
  m.def("sliding_constant_M", &sliding_constant_M, py::arg("problem"), py::arg("profile"));
  m.def("barrier_operator_margin", [](const ProfileProblem& p, const Profile& prof, double lam,
                                      double M) { return barrier_operator_margin(p, prof, lam, M); },
        py::arg("problem"), py::arg("profile"), py::arg("lam"), py::arg("M"));
  m.def("uniqueness_probe", &uniqueness_probe, py::arg("problem"), py::arg("options"),
        py::arg("n_guesses"), py::arg("seed") = kDefaultSeed,
        py::call_guard<py::gil_scoped_release>());
  m.def("translation_invariance_check", &translation_invariance_check, py::arg("problem"),
        py::arg("profile"), py::arg("lam"));

  m.def("write_profile", py::overload_cast<const Profile&, const std::string&>(&write_profile),
        py::arg("profile"), py::arg("path"));
  m.def("read_profile", py::overload_cast<const std::string&>(&read_profile), py::arg("path"));
  m.def("emit_plotdata", [](const std::vector<std::pair<std::string, Profile>>& profiles,
                            std::optional<RiemannSolution> reference, const std::string& csv,
                            const std::string& svg) {
    std::vector<LabeledProfile> labeled;
    for (const auto& [label, p] : profiles) labeled.push_back({label, p});
    emit_plotdata(labeled, reference, csv, svg);
  }, py::arg("profiles"), py::arg("reference") = std::nullopt, py::arg("csv_path"),
        py::arg("svg_path") = "");
}
