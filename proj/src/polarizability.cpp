#include "casprop/polarizability.hpp"

#include <cmath>
#include <stdexcept>

#include "casprop/constants.hpp"

namespace casprop {

double SpheroidSpec::eccentricity() const {
  if (r_par <= 0.0 || r_perp <= 0.0)
    throw std::domain_error("SpheroidSpec: semi-axes must be positive");
  if (r_perp > r_par) throw std::domain_error("SpheroidSpec: prolate branch requires r_par >= r_perp");
  const double q = r_perp / r_par;
  return std::sqrt(std::max(0.0, 1.0 - q * q));
}

double SpheroidSpec::volume() const { return 4.0 / 3.0 * pi * r_perp * r_perp * r_par; }

GeometricFactors geometric_factors(double eta) {
  if (eta < 0.0 || eta >= 1.0) throw std::domain_error("geometric_factors: eta in [0,1) required");
  if (eta < 1e-8) return {1.0 / 3.0, 1.0 / 3.0};  // sphere, bitwise equal components
  double n_par;
  if (eta < 0.5) {
    // exact series n_par = (1 - eta^2) sum_k eta^{2k}/(2k+3); the log formula
    // cancels catastrophically as eta -> 0 (leading terms 1/3 - 2 eta^2/15)
    double sum = 0.0, p = 1.0;
    const double e2 = eta * eta;
    for (int k = 0; k < 60; ++k) {
      const double term = p / (2.0 * k + 3.0);
      sum += term;
      if (term < 1e-17 * sum) break;
      p *= e2;
    }
    n_par = (1.0 - e2) * sum;
  } else {
    n_par = (1.0 - eta * eta) / (2.0 * eta * eta * eta) *
            (std::log((1.0 + eta) / (1.0 - eta)) - 2.0 * eta);
  }
  return {n_par, 0.5 * (1.0 - n_par)};
}

SpheroidPolarizability spheroid_polarizability(const SpheroidSpec& spec, double omega) {
  const double eta = spec.eccentricity();
  const auto nf = geometric_factors(eta);
  const cdouble eps = spec.material.permittivity(omega);
  const double vol3 = spec.r_perp * spec.r_perp * spec.r_par / 3.0;
  const cdouble em1 = eps - 1.0;
  const cdouble den_par = em1 * nf.n_par + 1.0;
  const cdouble den_perp = em1 * nf.n_perp + 1.0;
  if (std::abs(den_par) < 1e-300 || std::abs(den_perp) < 1e-300)
    throw std::domain_error("spheroid_polarizability: resonant denominator");
  return {vol3 * em1 / den_par, vol3 * em1 / den_perp};
}

Eigen::Matrix3cd lab_frame_tensor(cdouble alpha_par, cdouble alpha_perp, const Orientation& o) {
  Eigen::Matrix3d Oy, Oz;
  const double ct = std::cos(o.theta), st = std::sin(o.theta);
  const double cp = std::cos(o.phi), sp = std::sin(o.phi);
  // passive rotations; the composition maps the body z-axis onto
  // (st cp, st sp, ct)
  Oy << ct, 0.0, -st, 0.0, 1.0, 0.0, st, 0.0, ct;
  Oz << cp, sp, 0.0, -sp, cp, 0.0, 0.0, 0.0, 1.0;
  Eigen::Matrix3cd body = Eigen::Matrix3cd::Zero();
  body(0, 0) = alpha_perp;
  body(1, 1) = alpha_perp;
  body(2, 2) = alpha_par;
  Eigen::Matrix3cd mid = Oy.transpose().cast<cdouble>() * body * Oy.cast<cdouble>();
  return Oz.transpose().cast<cdouble>() * mid * Oz.cast<cdouble>();
}

double overlap_factor(const SpheroidSpec& spec, double omega) {
  const auto a = spheroid_polarizability(spec, omega);
  return (a.par * std::conj(a.perp)).imag();
}

}  // namespace casprop
