#include <doctest.h>

#include <cmath>

#include "casprop/constants.hpp"
#include "casprop/thermo.hpp"

using namespace casprop;

namespace {

TMatrixProvider spheroid_dipole_provider(const SpheroidSpec& spec, const Orientation& o) {
  return [spec, o](double omega) {
    auto a = spheroid_polarizability(spec, omega);
    return dipole_t_from_polarizability(lab_frame_tensor(a.par, a.perp, o), omega);
  };
}

}  // namespace

TEST_CASE("onsager identity: heating equals -T dF/dT") {
  SpheroidSpec spec{40e-9, 12e-9, preset_model("spheroid")};
  ThermalScene scene{400.0, 0.0, 400e-9, preset_model("plate1")};
  QuadratureSpec q;
  q.rel_tol = 1e-11;
  Orientation o{pi / 4.0, 0.0};

  auto force_at = [&](double T) {
    ThermalScene s = scene;
    s.T_particle = T;
    return lateral_force_spheroid(spec, o, s, q).value;
  };
  const double dT = 0.1;
  const double fd = -400.0 * (force_at(400.0 + dT) - force_at(400.0 - dT)) / (2.0 * dT);

  const double hs = heating_derivative_spheroid(spec, o, scene, q);
  CHECK(hs == doctest::Approx(fd).epsilon(1e-4));

  const double ht = heating_derivative_tmatrix(spheroid_dipole_provider(spec, o), scene, q,
                                               spheroid_mode_seeds(spec));
  CHECK(ht == doctest::Approx(hs).epsilon(1e-10));
}

TEST_CASE("heating: isotropic particle gives zero, orientation flips sign") {
  ThermalScene scene{400.0, 0.0, 400e-9, preset_model("plate1")};
  QuadratureSpec q;
  q.rel_tol = 1e-8;
  TMatrixProvider iso = [](double omega) {
    return dipole_t_from_polarizability(
        (cdouble(1e-23, 2e-24) * Eigen::Matrix3cd::Identity()).eval(), omega);
  };
  CHECK(heating_derivative_tmatrix(iso, scene, q) == 0.0);

  SpheroidSpec spec{40e-9, 12e-9, preset_model("spheroid")};
  double plus = heating_derivative_spheroid(spec, {0.6, 0.0}, scene, q);
  double minus = heating_derivative_spheroid(spec, {-0.6, 0.0}, scene, q);
  CHECK(plus == doctest::Approx(-minus).epsilon(1e-12));
  CHECK(plus != 0.0);
}

TEST_CASE("additional friction") {
  CHECK(additional_friction(0.0, 1e-9, 300.0) == 0.0);
  const double q = 3.7e-18;
  CHECK(additional_friction(q, 1e-9, 300.0) == additional_friction(-q, 1e-9, 300.0));
  CHECK(additional_friction(q, 1e-9, 300.0) > 0.0);
  // monotone decreasing in T at fixed dH/dv
  double prev = additional_friction(q, 1e-9, 100.0);
  for (double T : {200.0, 400.0, 800.0}) {
    double g = additional_friction(q, 1e-9, T);
    CHECK(g < prev);
    prev = g;
  }
  CHECK_THROWS(additional_friction(q, -1.0, 300.0));
  CHECK_THROWS(additional_friction(q, 1e-9, 0.0));
}

TEST_CASE("friction curve") {
  FrictionModel model{1e-18, 1e-12, 1e-14};  // tau2 = 1e-6 s
  CHECK(model.tau2() == doctest::Approx(1e-6));
  const double gs = 2e-15, dg = 5e-16;
  auto curve = friction_curve(gs, dg, model, {0.0, model.tau2(), 1.0});
  REQUIRE(curve.size() == 3);
  CHECK(curve[0].second == 0.0);
  // t = tau2 with tau1 << tau2: gamma_std + dg (1 - 1/e)
  CHECK(curve[1].second == doctest::Approx(gs + dg * (1.0 - std::exp(-1.0))).epsilon(1e-9));
  // saturation
  CHECK(curve[2].second == doctest::Approx(gs + dg).epsilon(1e-12));

  CHECK_THROWS(friction_curve(gs, dg, model, {0.5, 0.1}));
  CHECK_THROWS(friction_curve(gs, dg, model, {-1.0}));
}
