#include "casprop/thermo.hpp"

#include <cmath>
#include <stdexcept>

#include "casprop/constants.hpp"

namespace casprop {

double FrictionModel::tau2() const {
  if (heat_capacity <= 0.0 || heat_transfer <= 0.0)
    throw std::domain_error("FrictionModel: C > 0 and k > 0 required");
  return heat_capacity / heat_transfer;
}

namespace {

const double kLateralPrefactor = 27.0 / (128.0 * std::sqrt(2.0));
const double kSpheroidPrefactor = 3.0 / 64.0;

double heat_block_combination(const TMatrixBlock& T) {
  auto el = [&](int m, int mp) {
    return T.entry({Polarization::N, 1, m}, {Polarization::N, 1, mp});
  };
  double s = 0.0;
  for (int m = -1; m <= 1; ++m) {
    const double Am = m == 0 ? 2.0 : 1.0;
    s += Am * (el(-1, m) * std::conj(el(0, m)) - el(0, m) * std::conj(el(1, m))).real();
  }
  return s;
}

}  // namespace

double heating_derivative_tmatrix(const TMatrixProvider& provider, const ThermalScene& scene,
                                  const QuadratureSpec& quad,
                                  const std::vector<double>& seed_omegas) {
  if (scene.d <= 0.0) throw std::domain_error("heating_derivative_tmatrix: requires d > 0");
  auto f = [&](double omega) {
    const double nf = near_field_response(scene.plate.permittivity(omega));
    if (nf == 0.0) return 0.0;
    const double c6w6 = std::pow(c_light / omega, 6);
    return c6w6 * nf * heat_block_combination(provider(omega));
  };
  std::vector<double> seeds = surface_mode_seeds(scene.plate);
  for (double s : seed_omegas) seeds.push_back(s);
  auto r = thermal_integral(f, scene.T_particle, ThermalWeight::BoseDerivative, quad, seeds);
  return kLateralPrefactor * hbar / std::pow(scene.d, 7) * r.value;
}

double heating_derivative_spheroid(const SpheroidSpec& spec, const Orientation& o,
                                   const ThermalScene& scene, const QuadratureSpec& quad) {
  if (scene.d <= 0.0) throw std::domain_error("heating_derivative_spheroid: requires d > 0");
  const double angular = std::sin(2.0 * o.theta) * std::cos(o.phi);
  auto f = [&](double omega) {
    const double nf = near_field_response(scene.plate.permittivity(omega));
    if (nf == 0.0) return 0.0;
    return nf * overlap_factor(spec, omega);
  };
  std::vector<double> seeds = surface_mode_seeds(scene.plate);
  for (double s : spheroid_mode_seeds(spec)) seeds.push_back(s);
  auto r = thermal_integral(f, scene.T_particle, ThermalWeight::BoseDerivative, quad, seeds);
  // -T d/dT of the force route; the force carries -(3/64) sin(2t) cos(p)
  return kSpheroidPrefactor * hbar / std::pow(scene.d, 7) * angular * r.value;
}

double additional_friction(double heating_deriv, double heat_transfer, double T) {
  if (heat_transfer <= 0.0 || T <= 0.0)
    throw std::domain_error("additional_friction: k > 0 and T > 0 required");
  return heating_deriv * heating_deriv / (heat_transfer * T);
}

std::vector<std::pair<double, double>> friction_curve(double gamma_std, double delta_gamma,
                                                      const FrictionModel& model,
                                                      const std::vector<double>& t_grid) {
  const double t2 = model.tau2();
  std::vector<std::pair<double, double>> out;
  out.reserve(t_grid.size());
  double prev = -1.0;
  for (double t : t_grid) {
    if (t < 0.0 || t <= prev)
      throw std::invalid_argument("friction_curve: t_grid must be ascending and nonnegative");
    prev = t;
    const double g = gamma_std * (-std::expm1(-t / model.tau1)) +
                     delta_gamma * (-std::expm1(-t / t2));
    out.emplace_back(t, g);
  }
  return out;
}

}  // namespace casprop
