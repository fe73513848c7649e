#pragma once

#include <vector>

#include "casprop/forces.hpp"

// Onsager heating of a particle driven parallel to the plate, the resulting
// additional friction coefficient, and the two-timescale friction curve.

namespace casprop {

struct FrictionModel {
  double heat_capacity = 0.0;   // C, J/K
  double heat_transfer = 0.0;   // k, W/K
  double tau1 = 1e-14;          // electronic response scale, s

  double tau2() const;          // = C/k
};

// d<H>/dv_x at v = 0 from the l=1 N-block; equals -T dF_x/dT by Onsager
// reciprocity. Weight T dn/dT = x e^x/(e^x-1)^2, combination
// Re[T_{-1,m} T*_{0,m} - T_{0,m} T*_{1,m}], prefactor 27/(128 sqrt 2) hbar/d^7.
// Units W/(m/s) = N.
double heating_derivative_tmatrix(const TMatrixProvider& provider, const ThermalScene& scene,
                                  const QuadratureSpec& quad = {},
                                  const std::vector<double>& seed_omegas = {});

// Same quantity through the spheroid polarizability route.
double heating_derivative_spheroid(const SpheroidSpec& spec, const Orientation& o,
                                   const ThermalScene& scene, const QuadratureSpec& quad = {});

// Steady-state closure for the friction increment:
//   delta gamma = (dH/dv)^2 / (k T) >= 0.
double additional_friction(double heating_deriv, double heat_transfer, double T);

// gamma(t) = gamma_std (1 - e^{-t/tau1}) + dgamma (1 - e^{-t/tau2});
// schematic two-timescale build-up of the friction coefficient.
std::vector<std::pair<double, double>> friction_curve(double gamma_std, double delta_gamma,
                                                      const FrictionModel& model,
                                                      const std::vector<double>& t_grid);

}  // namespace casprop
