// pybind11 bindings exposing the main operations: dielectric models, T-matrix
// constructors, spheroid polarizabilities, force routes, heating and friction.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "casprop/constants.hpp"
#include "casprop/forces.hpp"
#include "casprop/specfun.hpp"
#include "casprop/thermo.hpp"

namespace py = pybind11;
using namespace casprop;

PYBIND11_MODULE(_casprop, m) {
  m.doc() = "Non-equilibrium Casimir self-propulsion forces for anisotropic particles";

  m.attr("hbar") = hbar;
  m.attr("k_boltzmann") = k_boltzmann;
  m.attr("c_light") = c_light;
  m.attr("g_standard") = g_standard;

  // ---- materials ----
  py::class_<LorentzOscillator>(m, "LorentzOscillator")
      .def(py::init<double, double, double>(), py::arg("strength"), py::arg("omega0"),
           py::arg("gamma"))
      .def_readwrite("strength", &LorentzOscillator::strength)
      .def_readwrite("omega0", &LorentzOscillator::omega0)
      .def_readwrite("gamma", &LorentzOscillator::gamma);

  py::class_<DielectricModel>(m, "DielectricModel")
      .def_static("constant", &DielectricModel::constant, py::arg("eps"), py::arg("mu") = cdouble(1.0))
      .def_static("lorentz", &DielectricModel::lorentz, py::arg("strength"), py::arg("omega0"),
                  py::arg("gamma"))
      .def_static("lorentz_sum", &DielectricModel::lorentz_sum)
      .def("permittivity", &DielectricModel::permittivity, py::arg("omega"))
      .def("permeability", &DielectricModel::permeability);

  m.def("preset_model", [](const std::string& name) { return preset_model(name); },
        py::arg("name"));
  m.def("near_field_response", &near_field_response, py::arg("eps_p"));
  m.def(
      "fresnel_reflection",
      [](const std::string& pol, double k_perp, double omega, cdouble eps, cdouble mu) {
        return fresnel_reflection(pol == "M" ? Polarization::M : Polarization::N, k_perp, omega,
                                  eps, mu);
      },
      py::arg("pol"), py::arg("k_perp"), py::arg("omega"), py::arg("eps"),
      py::arg("mu") = cdouble(1.0));

  // ---- scattering ----
  py::class_<Truncation>(m, "Truncation").def(py::init<int>(), py::arg("l_max"))
      .def_property_readonly("l_max", &Truncation::l_max)
      .def_property_readonly("size", &Truncation::size);

  py::class_<TMatrixBlock>(m, "TMatrixBlock")
      .def_readonly("omega", &TMatrixBlock::omega)
      .def_property_readonly("entries", [](const TMatrixBlock& b) { return b.entries; })
      .def("entry", [](const TMatrixBlock& b, const std::string& P, int l, int m,
                       const std::string& Pp, int lp, int mp) {
        return b.entry({P == "M" ? Polarization::M : Polarization::N, l, m},
                       {Pp == "M" ? Polarization::M : Polarization::N, lp, mp});
      });

  m.def(
      "mie_coefficient",
      [](const std::string& pol, int l, double R, cdouble eps, cdouble mu, double omega) {
        return mie_coefficient(pol == "M" ? Polarization::M : Polarization::N, l, R, eps, mu,
                               omega);
      },
      py::arg("pol"), py::arg("l"), py::arg("radius"), py::arg("eps"), py::arg("mu"),
      py::arg("omega"));
  m.def(
      "mie_t_matrix",
      [](double R, cdouble eps, cdouble mu, double omega, int l_max) {
        return mie_t_matrix(R, eps, mu, omega, Truncation(l_max));
      },
      py::arg("radius"), py::arg("eps"), py::arg("mu"), py::arg("omega"), py::arg("l_max"));
  m.def("dipole_t_from_polarizability", &dipole_t_from_polarizability, py::arg("alpha"),
        py::arg("omega"));
  m.def(
      "born_t_matrix",
      [](double R, cdouble eps_lower, cdouble eps_upper, double omega, int l_max, int nr, int nth,
         int nph) {
        return born_t_matrix({R, eps_lower, eps_upper}, omega, Truncation(l_max),
                             {nr, nth, nph, false, 1e-6});
      },
      py::arg("radius"), py::arg("eps_lower"), py::arg("eps_upper"), py::arg("omega"),
      py::arg("l_max") = 2, py::arg("n_radial") = 16, py::arg("n_polar") = 32,
      py::arg("n_azimuthal") = 64);
  m.def("check_t_symmetry", &check_t_symmetry);

  // ---- polarizability ----
  py::class_<SpheroidSpec>(m, "SpheroidSpec")
      .def(py::init([](double r_par, double r_perp, const DielectricModel& mat) {
             return SpheroidSpec{r_par, r_perp, mat};
           }),
           py::arg("r_par"), py::arg("r_perp"), py::arg("material"))
      .def_readwrite("r_par", &SpheroidSpec::r_par)
      .def_readwrite("r_perp", &SpheroidSpec::r_perp)
      .def("eccentricity", &SpheroidSpec::eccentricity)
      .def("volume", &SpheroidSpec::volume);

  py::class_<Orientation>(m, "Orientation")
      .def(py::init([](double theta, double phi) { return Orientation{theta, phi}; }),
           py::arg("theta"), py::arg("phi"))
      .def_readwrite("theta", &Orientation::theta)
      .def_readwrite("phi", &Orientation::phi);

  m.def("geometric_factors", [](double eta) {
    auto g = geometric_factors(eta);
    return std::pair{g.n_par, g.n_perp};
  });
  m.def("spheroid_polarizability", [](const SpheroidSpec& s, double omega) {
    auto a = spheroid_polarizability(s, omega);
    return std::pair{a.par, a.perp};
  });
  m.def("lab_frame_tensor", &lab_frame_tensor, py::arg("alpha_par"), py::arg("alpha_perp"),
        py::arg("orientation"));
  m.def("overlap_factor", &overlap_factor, py::arg("spec"), py::arg("omega"));

  // ---- forces ----
  py::class_<QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def_readwrite("rel_tol", &QuadratureSpec::rel_tol)
      .def_readwrite("x_min", &QuadratureSpec::x_min)
      .def_readwrite("x_max", &QuadratureSpec::x_max)
      .def_readwrite("max_panels", &QuadratureSpec::max_panels);

  py::class_<ThermalScene>(m, "ThermalScene")
      .def(py::init([](double T_particle, double T_plate, double d, const DielectricModel& plate) {
             return ThermalScene{T_particle, T_plate, d, plate};
           }),
           py::arg("T_particle"), py::arg("T_plate"), py::arg("d"), py::arg("plate"))
      .def_readwrite("T_particle", &ThermalScene::T_particle)
      .def_readwrite("T_plate", &ThermalScene::T_plate)
      .def_readwrite("d", &ThermalScene::d);

  py::class_<NearFieldValidity>(m, "NearFieldValidity")
      .def_readonly("r_over_d", &NearFieldValidity::r_over_d)
      .def_readonly("d_over_lambda_t", &NearFieldValidity::d_over_lambda_t)
      .def_readonly("satisfied", &NearFieldValidity::satisfied);

  py::class_<ForceResult>(m, "ForceResult")
      .def_readonly("value", &ForceResult::value)
      .def_readonly("quadrature_error", &ForceResult::quadrature_error)
      .def_readonly("validity", &ForceResult::validity)
      .def("__repr__", [](const ForceResult& f) {
        return "ForceResult(value=" + std::to_string(f.value) + ")";
      });

  m.def("isolated_force_z", &isolated_force_z, py::arg("provider"), py::arg("T"),
        py::arg("quad") = QuadratureSpec{}, py::arg("seed_omegas") = std::vector<double>{});
  m.def("small_object_force_z", &small_object_force_z, py::arg("provider"), py::arg("T"),
        py::arg("quad") = QuadratureSpec{}, py::arg("seed_omegas") = std::vector<double>{});
  m.def("janus_dilute_force", &janus_dilute_force, py::arg("eps_lower"), py::arg("eps_upper"),
        py::arg("radius"), py::arg("T"), py::arg("quad") = QuadratureSpec{});
  m.def("lateral_force_tmatrix", &lateral_force_tmatrix, py::arg("provider"), py::arg("scene"),
        py::arg("quad") = QuadratureSpec{}, py::arg("seed_omegas") = std::vector<double>{},
        py::arg("r_scale") = 0.0);
  m.def("lateral_force_polarizability", &lateral_force_polarizability, py::arg("provider"),
        py::arg("scene"), py::arg("quad") = QuadratureSpec{},
        py::arg("seed_omegas") = std::vector<double>{}, py::arg("r_scale") = 0.0);
  m.def("lateral_force_spheroid", &lateral_force_spheroid, py::arg("spec"), py::arg("orientation"),
        py::arg("scene"), py::arg("quad") = QuadratureSpec{});
  m.def("two_temperature_force", &two_temperature_force, py::arg("force_fn"),
        py::arg("T_particle"), py::arg("T_plate"));
  m.def("gravity_ratio", &gravity_ratio, py::arg("force"), py::arg("spec"), py::arg("rho"));
  m.def("spheroid_mode_seeds", &spheroid_mode_seeds);
  m.def("surface_mode_seeds", &surface_mode_seeds);

  // ---- thermo ----
  py::class_<FrictionModel>(m, "FrictionModel")
      .def(py::init([](double C, double k, double tau1) {
             return FrictionModel{C, k, tau1};
           }),
           py::arg("heat_capacity"), py::arg("heat_transfer"), py::arg("tau1") = 1e-14)
      .def("tau2", &FrictionModel::tau2);

  m.def("heating_derivative_tmatrix", &heating_derivative_tmatrix, py::arg("provider"),
        py::arg("scene"), py::arg("quad") = QuadratureSpec{},
        py::arg("seed_omegas") = std::vector<double>{});
  m.def("heating_derivative_spheroid", &heating_derivative_spheroid, py::arg("spec"),
        py::arg("orientation"), py::arg("scene"), py::arg("quad") = QuadratureSpec{});
  m.def("additional_friction", &additional_friction, py::arg("heating_deriv"),
        py::arg("heat_transfer"), py::arg("T"));
  m.def("friction_curve", &friction_curve, py::arg("gamma_std"), py::arg("delta_gamma"),
        py::arg("model"), py::arg("t_grid"));

  // ---- special functions (exposed for oracle-style checks) ----
  auto sf = m.def_submodule("specfun");
  sf.def("spherical_bessel_j", &specfun::spherical_bessel_j);
  sf.def("spherical_hankel1", &specfun::spherical_hankel1);
  sf.def("wigner3j", &specfun::wigner3j);
  sf.def("assoc_legendre", &specfun::assoc_legendre);
  sf.def("bose_weight", &specfun::bose_weight);
  sf.def("bose_weight_dT", &specfun::bose_weight_dT);
}
