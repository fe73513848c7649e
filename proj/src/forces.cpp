#include "casprop/forces.hpp"

#include <cmath>
#include <stdexcept>

#include "casprop/constants.hpp"
#include "casprop/specfun.hpp"

namespace casprop {

namespace {

const double kLateralPrefactor = 27.0 / (128.0 * std::sqrt(2.0));
const double kTensorPrefactor = 3.0 / 32.0;
const double kSpheroidPrefactor = 3.0 / 64.0;

// sum_m A_m Re[T_{0,m} T*_{1,m} - T_{-1,m} T*_{0,m}], A_0 = 2, A_{+-1} = 1,
// T_{m,m'} = T^{N,N}_{1m,1m'}.
double dipole_block_combination(const TMatrixBlock& T) {
  auto el = [&](int m, int mp) {
    return T.entry({Polarization::N, 1, m}, {Polarization::N, 1, mp});
  };
  double s = 0.0;
  for (int m = -1; m <= 1; ++m) {
    const double Am = m == 0 ? 2.0 : 1.0;
    s += Am * (el(0, m) * std::conj(el(1, m)) - el(-1, m) * std::conj(el(0, m))).real();
  }
  return s;
}

}  // namespace

NearFieldValidity near_field_validity(double r_scale, double d, double T) {
  NearFieldValidity v;
  v.r_over_d = r_scale > 0.0 && d > 0.0 ? r_scale / d : 0.0;
  v.d_over_lambda_t = T > 0.0 && d > 0.0 ? d / thermal_wavelength(T) : 0.0;
  v.satisfied = v.r_over_d < 0.2 && v.d_over_lambda_t < 0.2 && r_scale > 0.0 && T > 0.0;
  return v;
}

std::vector<double> resonance_seeds(const DielectricModel& model) {
  std::vector<double> seeds;
  for (const auto& o : model.oscillators()) {
    seeds.push_back(o.omega0);
    seeds.push_back(std::max(o.omega0 - 5.0 * o.gamma, 0.1 * o.omega0));
    seeds.push_back(o.omega0 + 5.0 * o.gamma);
  }
  return seeds;
}

std::vector<double> surface_mode_seeds(const DielectricModel& plate) {
  // eps = -1 at w = w0 sqrt(1 + C/2) for a single Lorentz oscillator
  std::vector<double> seeds = resonance_seeds(plate);
  for (const auto& o : plate.oscillators()) {
    const double ws = o.omega0 * std::sqrt(1.0 + 0.5 * o.strength);
    seeds.push_back(ws);
    seeds.push_back(ws - 5.0 * o.gamma);
    seeds.push_back(ws + 5.0 * o.gamma);
  }
  return seeds;
}

std::vector<double> spheroid_mode_seeds(const SpheroidSpec& spec) {
  // plasmon poles of alpha_{par/perp}: (eps-1) n_j + 1 = 0, i.e.
  // w = w0 sqrt(1 + C n_j) for a single oscillator
  std::vector<double> seeds = resonance_seeds(spec.material);
  const auto nf = geometric_factors(spec.eccentricity());
  for (const auto& o : spec.material.oscillators()) {
    for (double nj : {nf.n_par, nf.n_perp}) {
      const double wp = o.omega0 * std::sqrt(1.0 + o.strength * nj);
      seeds.push_back(wp);
      seeds.push_back(wp - 5.0 * o.gamma);
      seeds.push_back(wp + 5.0 * o.gamma);
    }
  }
  return seeds;
}

ForceResult isolated_force_z(const TMatrixProvider& provider, double T, const QuadratureSpec& quad,
                             const std::vector<double>& seed_omegas) {
  auto f = [&](double omega) {
    const TMatrixBlock T_block = provider(omega);
    const Eigen::MatrixXcd pz = p_z_matrix(T_block.trunc, omega);
    const cdouble tr = (pz * T_block.entries * T_block.entries.adjoint()).trace();
    return 2.0 * hbar / pi * tr.imag();
  };
  auto r = thermal_integral(f, T, ThermalWeight::Bose, quad, seed_omegas);
  return {r.value, r.error_estimate, {}};
}

ForceResult small_object_force_z(const TMatrixProvider& provider, double T,
                                 const QuadratureSpec& quad,
                                 const std::vector<double>& seed_omegas) {
  auto f = [&](double omega) {
    const TMatrixBlock T_block = provider(omega);
    if (T_block.trunc.l_max() < 2)
      throw std::invalid_argument("small_object_force_z: needs l_max >= 2 in the block");
    auto el = [&](Polarization P, int l, int m, int mp) {
      return T_block.entry({P, l, m}, {Polarization::N, 1, mp});
    };
    double s = 0.0;
    for (int m = -1; m <= 1; ++m) {
      for (int mp = -1; mp <= 1; ++mp) {
        const cdouble t11 = el(Polarization::N, 1, m, mp);
        s += -translation_coef_a(1, m) *
                 (el(Polarization::M, 1, m, mp) * std::conj(t11)).real() +
             translation_coef_b(1, m) * (el(Polarization::N, 2, m, mp) * std::conj(t11)).imag();
      }
    }
    return 4.0 * hbar / (pi * c_light) * omega * s;
  };
  auto r = thermal_integral(f, T, ThermalWeight::Bose, quad, seed_omegas);
  return {r.value, r.error_estimate, {}};
}

ForceResult janus_dilute_force(const DielectricModel& eps_lower, const DielectricModel& eps_upper,
                               double radius, double T, const QuadratureSpec& quad) {
  if (radius <= 0.0) throw std::domain_error("janus_dilute_force: requires R > 0");
  const double r9 = std::pow(radius, 9);
  auto f = [&](double omega) {
    const cdouble e1 = eps_lower.permittivity(omega);
    const cdouble e2 = eps_upper.permittivity(omega);
    const double bracket = e2.imag() * (e1.real() - 1.0) - e1.imag() * (e2.real() - 1.0);
    return 2.0 * hbar / (pi * std::pow(c_light, 10)) * std::pow(omega, 10) * r9 / 1620.0 * bracket;
  };
  std::vector<double> seeds = resonance_seeds(eps_lower);
  for (double s : resonance_seeds(eps_upper)) seeds.push_back(s);
  auto r = thermal_integral(f, T, ThermalWeight::Bose, quad, seeds);
  return {r.value, r.error_estimate, {}};
}

ForceResult lateral_force_tmatrix(const TMatrixProvider& provider, const ThermalScene& scene,
                                  const QuadratureSpec& quad,
                                  const std::vector<double>& seed_omegas, double r_scale) {
  if (scene.d <= 0.0) throw std::domain_error("lateral_force_tmatrix: requires d > 0");
  auto f = [&](double omega) {
    const double nf = near_field_response(scene.plate.permittivity(omega));
    if (nf == 0.0) return 0.0;
    const TMatrixBlock T_block = provider(omega);
    const double c6w6 = std::pow(c_light / omega, 6);
    return c6w6 * nf * dipole_block_combination(T_block);
  };
  std::vector<double> seeds = surface_mode_seeds(scene.plate);
  for (double s : seed_omegas) seeds.push_back(s);
  auto r = thermal_integral(f, scene.T_particle, ThermalWeight::Bose, quad, seeds);
  const double pref = kLateralPrefactor * hbar / std::pow(scene.d, 7);
  ForceResult out{pref * r.value, std::abs(pref) * r.error_estimate,
                  near_field_validity(r_scale, scene.d, scene.T_particle)};
  return out;
}

ForceResult lateral_force_polarizability(const PolarizabilityProvider& provider,
                                         const ThermalScene& scene, const QuadratureSpec& quad,
                                         const std::vector<double>& seed_omegas, double r_scale) {
  if (scene.d <= 0.0) throw std::domain_error("lateral_force_polarizability: requires d > 0");
  auto f = [&](double omega) {
    const double nf = near_field_response(scene.plate.permittivity(omega));
    if (nf == 0.0) return 0.0;
    const Eigen::Matrix3cd a = provider(omega);
    const double comb = (a(2, 0) * std::conj(a(0, 0)) + a(2, 1) * std::conj(a(0, 1)) +
                         2.0 * a(2, 2) * std::conj(a(0, 2)))
                            .imag();
    return nf * comb;
  };
  std::vector<double> seeds = surface_mode_seeds(scene.plate);
  for (double s : seed_omegas) seeds.push_back(s);
  auto r = thermal_integral(f, scene.T_particle, ThermalWeight::Bose, quad, seeds);
  const double pref = kTensorPrefactor * hbar / std::pow(scene.d, 7);
  return {pref * r.value, std::abs(pref) * r.error_estimate,
          near_field_validity(r_scale, scene.d, scene.T_particle)};
}

ForceResult lateral_force_spheroid(const SpheroidSpec& spec, const Orientation& o,
                                   const ThermalScene& scene, const QuadratureSpec& quad) {
  if (scene.d <= 0.0) throw std::domain_error("lateral_force_spheroid: requires d > 0");
  const double angular = std::sin(2.0 * o.theta) * std::cos(o.phi);
  auto f = [&](double omega) {
    const double nf = near_field_response(scene.plate.permittivity(omega));
    if (nf == 0.0) return 0.0;
    return nf * overlap_factor(spec, omega);
  };
  std::vector<double> seeds = surface_mode_seeds(scene.plate);
  for (double s : spheroid_mode_seeds(spec)) seeds.push_back(s);
  auto r = thermal_integral(f, scene.T_particle, ThermalWeight::Bose, quad, seeds);
  const double pref = -kSpheroidPrefactor * hbar / std::pow(scene.d, 7) * angular;
  return {pref * r.value, std::abs(pref) * r.error_estimate,
          near_field_validity(spec.r_par, scene.d, scene.T_particle)};
}

ForceResult two_temperature_force(const std::function<ForceResult(double)>& force_fn,
                                  double T_particle, double T_plate) {
  if (T_particle < 0.0 || T_plate < 0.0)
    throw std::domain_error("two_temperature_force: temperatures >= 0 required");
  const ForceResult a = force_fn(T_particle);
  const ForceResult b = force_fn(T_plate);
  ForceResult out = a;
  out.value = a.value - b.value;
  out.quadrature_error = a.quadrature_error + b.quadrature_error;
  return out;
}

double gravity_ratio(double force, const SpheroidSpec& spec, double rho) {
  if (rho <= 0.0) throw std::domain_error("gravity_ratio: requires rho > 0");
  return force / (rho * spec.volume() * g_standard);
}

}  // namespace casprop
